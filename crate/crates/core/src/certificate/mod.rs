//! The assembled upper bound `d(P3) <= sum_i C_i P(F_i)` and its checks.
//!
//! `C_i = nu(P3, F_i) + sum_j p_j [F_i] P_j` where `P0` is the clique-density
//! slack and `P1..P3` are the three squares. Everything stays symbolic in
//! `r`; integer scans over a range of `r` are a second, independent check.

pub mod published;

use crate::error::{Error, Result};
use crate::exactmath::{positive_on_integer_ray, Polynomial, Rational, RationalFunction, RayCertificate};
use crate::flags::identify::{diff, CoefficientDiff};
use crate::flags::{load_fixture, Flag, FlagFixture, FlagVector, Type, FLAG_FIXTURE};
use crate::graphs::{count_subgraphs, f4_basis, induced_density, named, Graph, F4_FIXTURE};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeSet;

pub const REPORT_VERSION: u32 = 1;

/// Smallest `r` the certificate covers.
pub const MIN_R: u64 = 4;

/// Path counts `nu(P3, F_i)` over the basis.
pub fn p3_counts() -> Vec<u64> {
    let p3 = named::p3();
    f4_basis().graphs().iter().map(|g| count_subgraphs(&p3, g)).collect()
}

fn poly(desc: &[i64]) -> Polynomial {
    Polynomial::from_desc(desc)
}

/// `(r-1)(r-2)(r-3)/r^3`, the limiting `K4` density of `T_r(n)`.
fn zykov_term() -> RationalFunction {
    let num = &(&poly(&[1, -1]) * &poly(&[1, -2])) * &poly(&[1, -3]);
    RationalFunction::new(num, poly(&[1, 0, 0, 0])).expect("r^3 is nonzero")
}

/// The slack `z - P(K4)` written over the basis using `sum_i P(F_i) = 1`:
/// `z` on `F0..F9` and `z - 1` on `K4`.
pub fn build_p0() -> FlagVector {
    let basis = f4_basis();
    let z = zykov_term();
    let mut v = FlagVector::zero(Type::empty());
    for (i, g) in basis.graphs().iter().enumerate() {
        let c = if i == 10 { &z - &RationalFunction::one() } else { z.clone() };
        v.add_term(Flag::unlabelled(g), c).expect("empty type");
    }
    v
}

fn coefficients(v: &FlagVector) -> Vec<RationalFunction> {
    crate::flags::basis_coefficients(v, &f4_basis()).expect("vector over the basis")
}

/// The eleven coefficients `C_F0 .. C_F10`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientTable {
    pub entries: Vec<RationalFunction>,
}

impl CoefficientTable {
    /// All eleven values at `r`.
    pub fn eval(&self, r: &Rational) -> Result<Vec<Rational>> {
        self.entries.iter().map(|c| c.eval(r)).collect()
    }

    /// `sum_i C_i(r) P(F_i, g)`.
    pub fn bound_on(&self, r: &Rational, g: &Graph) -> Result<Rational> {
        let basis = f4_basis();
        let mut total = Rational::from_integer(0.into());
        for (c, f) in self.entries.iter().zip(basis.graphs()) {
            total += c.eval(r)? * induced_density(f, g);
        }
        Ok(total)
    }
}

/// Assembles the table from expansions `P1..P3` (basis order) and the
/// printed weights.
pub fn assemble(expansions: &[Vec<RationalFunction>; 3]) -> CoefficientTable {
    let nu = p3_counts();
    let p0 = coefficients(&build_p0());
    let w = published::weights();
    let entries = (0..11)
        .map(|i| {
            let mut c = RationalFunction::from_int(nu[i] as i64) + &w[0] * &p0[i];
            for j in 0..3 {
                c = c + &w[j + 1] * &expansions[j][i];
            }
            c
        })
        .collect();
    CoefficientTable { entries }
}

/// The table from the frozen flag identification.
pub fn build_certificate() -> Result<CoefficientTable> {
    Ok(assemble(&load_fixture()?.expansions))
}

/// The same assembly applied to the printed expansions. Reproduces the
/// printed table if the print is internally consistent.
pub fn assemble_published() -> CoefficientTable {
    assemble(&[
        published::p1_expansion(),
        published::p2_expansion(),
        published::p3_expansion(),
    ])
}

/// Basis indices where the coefficient equals `OPT` identically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightSet(pub BTreeSet<usize>);

impl TightSet {
    pub fn of(table: &CoefficientTable) -> Self {
        let opt = published::opt();
        TightSet(
            table
                .entries
                .iter()
                .enumerate()
                .filter(|(_, c)| **c == opt)
                .map(|(i, _)| i)
                .collect(),
        )
    }
}

/// Maximum and argmax of the table at one `r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerR {
    pub r: u64,
    #[serde(serialize_with = "ser_rational")]
    pub max: Rational,
    pub argmax: Vec<usize>,
}

fn ser_rational<S: serde::Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// Outcome of the integer scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxScan {
    pub r_range: [u64; 2],
    pub per_r: Vec<PerR>,
    /// `r` values where the maximum is not `OPT`, with the offending index.
    pub failures: Vec<(u64, usize)>,
    /// `r` values where the argmax differs from the tight set.
    pub argmax_mismatches: Vec<u64>,
}

impl MaxScan {
    pub fn max_holds(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn argmax_holds(&self) -> bool {
        self.argmax_mismatches.is_empty()
    }
}

fn check_r_range(rmin: u64, rmax: u64) -> Result<()> {
    if rmin < MIN_R {
        return Err(Error::InvalidProblem(format!(
            "the certificate covers r >= {MIN_R}, got r = {rmin}"
        )));
    }
    if rmax < rmin {
        return Err(Error::InvalidProblem(format!("empty range [{rmin}, {rmax}]")));
    }
    Ok(())
}

/// Evaluates the table at every integer `r` in `[rmin, rmax]` and compares
/// the maximum with `OPT` and the argmax with `tight`.
pub fn verify_max_of(table: &CoefficientTable, tight: &TightSet, rmin: u64, rmax: u64) -> Result<MaxScan> {
    check_r_range(rmin, rmax)?;
    let opt = published::opt();
    let rows: Vec<(PerR, Option<usize>)> = (rmin..=rmax)
        .into_par_iter()
        .map(|r| {
            let x = Rational::from_integer(r.into());
            let vals = table.eval(&x)?;
            let max = vals.iter().max().expect("eleven entries").clone();
            let argmax: Vec<usize> = (0..vals.len()).filter(|&i| vals[i] == max).collect();
            let bad = if max == opt.eval(&x)? { None } else { Some(argmax[0]) };
            Ok((PerR { r, max, argmax }, bad))
        })
        .collect::<Result<_>>()?;
    let tight: Vec<usize> = tight.0.iter().copied().collect();
    let mut scan = MaxScan {
        r_range: [rmin, rmax],
        per_r: Vec::with_capacity(rows.len()),
        failures: Vec::new(),
        argmax_mismatches: Vec::new(),
    };
    for (row, bad) in rows {
        if let Some(i) = bad {
            scan.failures.push((row.r, i));
        }
        if row.argmax != tight {
            scan.argmax_mismatches.push(row.r);
        }
        scan.per_r.push(row);
    }
    Ok(scan)
}

/// Integer scan of the derived table against the printed tight set.
pub fn verify_max(rmin: u64, rmax: u64) -> Result<MaxScan> {
    let table = build_certificate()?;
    verify_max_of(&table, &TightSet(published::TIGHT_SET.into_iter().collect()), rmin, rmax)
}

/// A named ray-positivity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub expression: RationalFunction,
    pub certificate: RayCertificate,
    /// Whether the certificate establishes the claim (non-strict or strict
    /// as the claim requires).
    pub holds: bool,
}

fn ray_check(name: impl Into<String>, f: RationalFunction, strict: bool) -> Result<NamedCheck> {
    let certificate = positive_on_integer_ray(&f, MIN_R as i64)?;
    let holds = if strict {
        certificate.verdict.is_positive()
    } else {
        certificate.verdict.is_nonnegative()
    };
    Ok(NamedCheck {
        name: name.into(),
        expression: f,
        certificate,
        holds,
    })
}

/// `p_j(r) >= 0` on `r >= 4` for the four weights.
pub fn verify_weights() -> Result<Vec<NamedCheck>> {
    published::weights()
        .into_iter()
        .enumerate()
        .map(|(j, w)| ray_check(format!("p{j}"), w, false))
        .collect()
}

/// `OPT - C_i >= 0` on all real `r >= 4`, for each entry.
pub fn verify_opt_dominates(table: &CoefficientTable) -> Result<Vec<NamedCheck>> {
    let opt = published::opt();
    table
        .entries
        .iter()
        .enumerate()
        .map(|(i, c)| ray_check(format!("OPT - C_F{i}"), &opt - c, false))
        .collect()
}

/// The closing scalar inequalities of the stability argument, each strict
/// on `r >= 4`. Both variants of the second-kind bound are checked.
pub fn verify_closing_inequalities() -> Result<Vec<NamedCheck>> {
    use published::*;
    let opt = opt();
    let t = vertex_threshold();
    Ok(vec![
        ray_check("OPT - delta1 > 9/r - 39/(2r^2)", &(&opt - &delta1()) - &bound1(), true)?,
        ray_check(
            "OPT - delta2 > 18/r - 42/r^2 - 12/r^3",
            &(&opt - &delta2()) - &bound2_displayed(),
            true,
        )?,
        ray_check("18/r - 42/r^2 - 12/r^3 > 1/r^4", &bound2_displayed() - &t, true)?,
        ray_check("18/r - 48/r^2 - 12/r^3 > 1/r^4", &bound2_closing() - &t, true)?,
        ray_check("9/r - 39/(2r^2) > 1/r^4", &bound1() - &t, true)?,
    ])
}

/// Finite-size slack `eps(n)` with `d(P3, G) <= sum_i C_i(r) P(F_i, G) + eps(n)`
/// for every `K_{r+1}`-free `G` on `n >= 4` vertices.
///
/// The gap is `-sum_j p_j P_j(G)`. A finite graph can exceed the limiting
/// clique density, but by the clique-count extremality of `T_r(n)` only by
/// `k4(T_r(n)) / C(n, 4) - z(r)`. Each square `6 [[a^2]]` evaluates to
/// `6 E[(sum c_F P(F))^2]` up to the gap between drawing the two free
/// vertices with and without replacement, at most `1/(n - 2)` per pair of
/// flags, so `P_j(G) >= -6 (sum |c_F|)^2 / (n - 2)`.
pub fn finite_size_correction(r: u64, n: u64) -> Result<Rational> {
    if r < MIN_R || n < 4 {
        return Err(Error::InvalidProblem(format!("need r >= {MIN_R} and n >= 4")));
    }
    let x = Rational::from_integer(r.into());
    let w: Vec<Rational> = published::weights().iter().map(|p| p.eval(&x)).collect::<Result<_>>()?;
    let choose4 = Rational::from_integer((n * (n - 1) * (n - 2) * (n - 3) / 24).into());
    let k4 = crate::turan::zykov_k4(crate::turan::TuranSpec::new(r as usize, n)?);
    let excess = Rational::from_integer(k4.into()) / choose4 - zykov_term().eval(&x)?;
    let zero = Rational::from_integer(0.into());
    let mut eps = &w[0] * excess.max(zero);
    // sum of |coefficients| of (r-1)A - B, C - D, (r-2)C + (r-2)D - 2E
    let l1 = [r, 2, 2 * r - 2];
    for (j, s) in l1.iter().enumerate() {
        let s = Rational::from_integer((*s).into());
        eps += &w[j + 1] * Rational::from_integer(6.into()) * &s * &s / Rational::from_integer((n - 2).into());
    }
    Ok(eps)
}

/// Comparison of derived and printed quantities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureReport {
    pub flags_fixture_sha256: String,
    pub f4_basis_sha256: String,
    pub identification_unique: bool,
    pub p1_matches_print: bool,
    pub p2_matches_print: bool,
    pub p3_matches_print: bool,
    pub p3_diffs: Vec<CoefficientDiff>,
    pub p0_matches_print: bool,
    pub table_matches_print: bool,
    pub table_diffs: Vec<CoefficientDiff>,
    /// The printed expansions, pushed through the same assembly, give the
    /// printed table.
    pub print_self_consistent: bool,
}

pub fn fixture_report(table: &CoefficientTable) -> Result<FixtureReport> {
    let fx: FlagFixture = load_fixture()?;
    let id = crate::flags::identify_flags()?;
    let printed = [
        published::p1_expansion(),
        published::p2_expansion(),
        published::p3_expansion(),
    ];
    let p0 = coefficients(&build_p0());
    let z = published::zykov_bound();
    let p0_matches_print = p0[..10].iter().all(|c| *c == z) && p0[10] == published::p0_k4_coefficient();
    let pub_table = published::coefficient_table();
    let table_diffs = diff(&pub_table, &table.entries);
    Ok(FixtureReport {
        flags_fixture_sha256: FlagFixture::hash(FLAG_FIXTURE),
        f4_basis_sha256: FlagFixture::hash(F4_FIXTURE),
        identification_unique: id.fully_matched(),
        p1_matches_print: fx.expansions[0] == printed[0],
        p2_matches_print: fx.expansions[1] == printed[1],
        p3_matches_print: fx.expansions[2] == printed[2],
        p3_diffs: diff(&printed[2], &fx.expansions[2]),
        p0_matches_print,
        table_matches_print: table_diffs.is_empty(),
        table_diffs,
        print_self_consistent: assemble_published().entries == pub_table,
    })
}

/// Symbolic verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Symbolic {
    pub p_nonneg: Vec<NamedCheck>,
    pub opt_minus_c_nonneg: Vec<NamedCheck>,
    pub closing: Vec<NamedCheck>,
    pub tight_set: TightSet,
}

/// Overall pass/fail flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    /// Weights, `OPT - C_i` and the integer scan all pass: the bound holds.
    pub sound: bool,
    pub weights_nonneg: bool,
    pub opt_dominates: bool,
    pub max_holds: bool,
    pub tight_set_holds: bool,
    pub closing_holds: bool,
    /// Every printed value is reproduced exactly.
    pub matches_print: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub version: u32,
    pub r_range: [u64; 2],
    pub per_r: Vec<PerR>,
    pub max_failures: Vec<(u64, usize)>,
    pub table: CoefficientTable,
    pub symbolic: Symbolic,
    pub fixtures: FixtureReport,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

/// Runs every check for `r` in `[rmin, rmax]`.
pub fn certify(rmin: u64, rmax: u64) -> Result<CertificateReport> {
    let table = build_certificate()?;
    let tight = TightSet(published::TIGHT_SET.into_iter().collect());
    let scan = verify_max_of(&table, &tight, rmin, rmax)?;
    let p_nonneg = verify_weights()?;
    let opt_minus_c_nonneg = verify_opt_dominates(&table)?;
    let closing = verify_closing_inequalities()?;
    let fixtures = fixture_report(&table)?;
    let tight_set = TightSet::of(&table);

    let weights_nonneg = p_nonneg.iter().all(|c| c.holds);
    let opt_dominates = opt_minus_c_nonneg.iter().all(|c| c.holds);
    let verdict = Verdict {
        sound: weights_nonneg && opt_dominates && scan.max_holds(),
        weights_nonneg,
        opt_dominates,
        max_holds: scan.max_holds(),
        tight_set_holds: scan.argmax_holds() && tight_set == tight,
        closing_holds: closing.iter().all(|c| c.holds),
        matches_print: fixtures.identification_unique
            && fixtures.p1_matches_print
            && fixtures.p2_matches_print
            && fixtures.p3_matches_print
            && fixtures.p0_matches_print
            && fixtures.table_matches_print,
    };
    Ok(CertificateReport {
        version: REPORT_VERSION,
        r_range: scan.r_range,
        per_r: scan.per_r,
        max_failures: scan.failures,
        table,
        symbolic: Symbolic {
            p_nonneg,
            opt_minus_c_nonneg,
            closing,
            tight_set,
        },
        fixtures,
        verdict,
        timing_ms: None,
    })
}
