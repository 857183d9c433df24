//! Replication of the catalogued elimination tables.
//!
//! Each table row stores the printed values next to exact recomputation of
//! every derivable column; a mismatch is flagged DISCREPANCY rather than
//! treated as a failure, since the recomputation is the normative output.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::sieve::orders::GroupOrderSpec::{self, *};
use crate::sieve::{
    pbounds_check, q_part, simple_group_order, solve_order_equation,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableId {
    /// Gaussian-binomial point counts for linear-group parabolic cases.
    Pi,
    /// Subfield-subgroup cases of the linear groups.
    C5,
    /// The unitary four-row case list with the degree typo.
    Psu12,
    /// Candidate (T, T_P) pairs with the window bound verdict.
    NotNovelty,
    /// Discriminant values of the surviving candidate pairs.
    Delta,
    /// q-part bookkeeping for orthogonal nonsingular-subspace stabilizers.
    O1,
    /// q-part bookkeeping for orthogonal extension-field stabilizers.
    O2,
    /// Left-over small cases with the degree-d discriminant.
    Leftover,
}

impl TableId {
    pub fn parse(s: &str) -> Result<TableId> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "pi" => Ok(TableId::Pi),
            "c5" => Ok(TableId::C5),
            "psu12" => Ok(TableId::Psu12),
            "notnovelty" => Ok(TableId::NotNovelty),
            "delta" => Ok(TableId::Delta),
            "o1" => Ok(TableId::O1),
            "o2" => Ok(TableId::O2),
            "leftover" => Ok(TableId::Leftover),
            other => Err(Error::UnknownTable(other.to_string())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TableId::Pi => "Pi",
            TableId::C5 => "C5",
            TableId::Psu12 => "PSU12",
            TableId::NotNovelty => "NotNovelty",
            TableId::Delta => "Delta",
            TableId::O1 => "O1",
            TableId::O2 => "O2",
            TableId::Leftover => "Leftover",
        }
    }

    pub fn all() -> [TableId; 8] {
        [
            TableId::Pi,
            TableId::C5,
            TableId::Psu12,
            TableId::NotNovelty,
            TableId::Delta,
            TableId::O1,
            TableId::O2,
            TableId::Leftover,
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowStatus {
    Match,
    Discrepancy,
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub recomputed: String,
    pub printed: Option<String>,
    pub matched: bool,
}

#[derive(Debug, Clone)]
pub struct RowReport {
    pub label: String,
    pub checks: Vec<CheckReport>,
    pub status: RowStatus,
    pub note: Option<String>,
}

#[derive(Debug, Clone)]
pub struct SieveReport {
    pub table: String,
    pub rows: Vec<RowReport>,
    pub discrepancy_count: usize,
}

impl SieveReport {
    pub fn render_text(&self) -> String {
        let mut out = format!("table {}\n", self.table);
        for row in &self.rows {
            let status = match row.status {
                RowStatus::Match => "ok",
                RowStatus::Discrepancy => "DISCREPANCY",
            };
            out.push_str(&format!("  [{status}] {}\n", row.label));
            for c in &row.checks {
                match (&c.printed, c.matched) {
                    (Some(p), true) => {
                        out.push_str(&format!("      {} = {} (printed {p})\n", c.name, c.recomputed))
                    }
                    (Some(p), false) => out.push_str(&format!(
                        "      {} = {} but printed value is {p}  <-- DISCREPANCY\n",
                        c.name, c.recomputed
                    )),
                    (None, _) => {
                        out.push_str(&format!("      {} = {}\n", c.name, c.recomputed))
                    }
                }
            }
            if let Some(n) = &row.note {
                out.push_str(&format!("      note: {n}\n"));
            }
        }
        out.push_str(&format!(
            "  rows: {}, discrepancies: {}\n",
            self.rows.len(),
            self.discrepancy_count
        ));
        out
    }
}

fn chk<T: ToString, U: ToString>(name: &str, recomputed: T, printed: Option<U>) -> CheckReport {
    let recomputed = recomputed.to_string();
    let printed = printed.map(|p| p.to_string());
    let matched = printed.as_deref().is_none_or(|p| p == recomputed);
    CheckReport { name: name.to_string(), recomputed, printed, matched }
}

fn finish_row(label: String, checks: Vec<CheckReport>, note: Option<String>) -> RowReport {
    let status = if checks.iter().all(|c| c.matched) {
        RowStatus::Match
    } else {
        RowStatus::Discrepancy
    };
    RowReport { label, checks, status, note }
}

fn finish_report(id: TableId, rows: Vec<RowReport>) -> SieveReport {
    let discrepancy_count =
        rows.iter().filter(|r| r.status == RowStatus::Discrepancy).count();
    SieveReport { table: id.name().to_string(), rows, discrepancy_count }
}

/// Recompute a catalogued table and compare against its printed values.
pub fn replicate_table(id: TableId) -> Result<SieveReport> {
    match id {
        TableId::Pi => table_pi(),
        TableId::C5 => table_c5(),
        TableId::Psu12 => table_psu12(),
        TableId::NotNovelty => table_not_novelty(),
        TableId::Delta => table_delta(),
        TableId::O1 => table_o1(),
        TableId::O2 => table_o2(),
        TableId::Leftover => table_leftover(),
    }
}

// ---- table Pi: parabolic point counts for linear groups ----

/// (n, q, secondary parameter, t+1, printed |P|, printed bound, printed sol).
type PrintedCaseRow = (u32, u64, u64, u64, u64, bool, Option<bool>);

fn table_pi() -> Result<SieveReport> {
    // (n, q, n - i, t+1, printed |P|, printed bound, printed solution)
    const ROWS: &[PrintedCaseRow] = &[
        (4, 4, 2, 6, 357, false, None),
        (4, 5, 2, 5, 806, false, None),
        (4, 7, 2, 7, 2850, false, None),
        (4, 8, 2, 28, 4745, true, Some(false)),
        (4, 9, 2, 6, 7462, false, None),
        (4, 11, 2, 11, 16226, false, None),
        (5, 2, 3, 8, 155, true, Some(false)),
        (6, 2, 3, 8, 1395, false, None),
        (6, 2, 4, 8, 651, false, None),
        (7, 2, 4, 8, 11811, false, None),
        (8, 2, 4, 8, 200787, false, None),
    ];
    let mut rows = Vec::new();
    for &(n, q, ni, t1, printed_p, printed_bound, printed_sol) in ROWS {
        let i = n - ni as u32;
        let p = crate::algebra::gaussian_binomial(n, i, &BigUint::from(q))?;
        let bound = pbounds_check(&p, t1 - 1).upper;
        let sol = solve_order_equation(&p, &BigUint::from(t1 - 1));
        let mut checks = vec![
            chk("|P|", &p, Some(printed_p)),
            chk("|P| < (t+1)^3", bound, Some(printed_bound)),
        ];
        if let Some(ps) = printed_sol {
            checks.push(chk("integral s", sol.s.is_some(), Some(ps)));
            checks.push(chk("Delta", &sol.delta, None::<&str>));
        }
        rows.push(finish_row(format!("(n,q)=({n},{q}), stabilizer type ({ni},{q}), t+1={t1}"), checks, None));
    }
    Ok(finish_report(TableId::Pi, rows))
}

// ---- table C5: subfield subgroups of linear groups ----

fn table_c5() -> Result<SieveReport> {
    // (n, q, q0, t+1, printed |P|, printed bound, printed solution)
    const ROWS: &[PrintedCaseRow] = &[
        (2, 16, 4, 6, 68, true, Some(false)),
        (2, 25, 5, 5, 65, true, Some(false)),
        (2, 49, 7, 7, 175, true, Some(false)),
        (2, 64, 8, 28, 520, false, None),
        (2, 81, 9, 6, 369, false, None),
        (2, 121, 11, 11, 671, true, Some(false)),
        (3, 4, 2, 8, 120, true, Some(false)),
        (4, 4, 2, 8, 48960, false, None),
    ];
    let mut rows = Vec::new();
    for &(n, q, q0, t1, printed_p, printed_bound, printed_sol) in ROWS {
        let total = simple_group_order(&PSL { n, q })?;
        // the subfield subgroup induces PGL when n = 2 and q0 is odd
        let mult = if n == 2 && q0 % 2 == 1 { 2u32 } else { 1 };
        let stab = simple_group_order(&PSL { n, q: q0 })? * mult;
        let (p, rem) = total.div_rem(&stab);
        if !rem.is_zero() {
            return Err(Error::UnsupportedOrderSpec(format!("non-integral index at ({n},{q})")));
        }
        let b = pbounds_check(&p, t1 - 1);
        let sol = solve_order_equation(&p, &BigUint::from(t1 - 1));
        let mut checks = vec![
            chk("|P|", &p, Some(printed_p)),
            chk("(t+1)^2 < |P| < (t+1)^3", b.holds, Some(printed_bound)),
        ];
        if let Some(ps) = printed_sol {
            checks.push(chk("integral s", sol.s.is_some(), Some(ps)));
        }
        rows.push(finish_row(format!("(n,q)=({n},{q}), subfield ({n},{q0}), t+1={t1}"), checks, None));
    }
    Ok(finish_report(TableId::C5, rows))
}

// ---- table PSU12: the unitary case list with the degree typo ----

fn table_psu12() -> Result<SieveReport> {
    // (printed q, s+1, printed |P|, printed solution, printed t <= s^2)
    const ROWS: &[(u64, u64, u64, bool, Option<bool>)] = &[
        (4, 11, 1105, false, None),
        (5, 11, 3276, false, None),
        (7, 15, 17200, false, None),
        (1, 12, 162504, true, Some(false)),
    ];
    let points = |q: u64| {
        let b = BigUint::from(q);
        (b.pow(2) + 1u32) * (b.pow(3) + 1u32)
    };
    let mut rows = Vec::new();
    for &(printed_q, s1, printed_p, printed_sol, printed_tle) in ROWS {
        let from_printed_q = points(printed_q);
        let printed_p_big = BigUint::from(printed_p);
        let mut note = None;
        let q = if from_printed_q == printed_p_big {
            printed_q
        } else {
            // recover the parameter matching the printed point count
            let recovered = (2..=200).find(|&c| points(c) == printed_p_big);
            note = Some(format!(
                "printed q = {printed_q} is inconsistent with |P| = {printed_p}; \
                 recomputation matches q = {}",
                recovered.map_or("none".to_string(), |c| c.to_string())
            ));
            recovered.unwrap_or(printed_q)
        };
        let p = points(q);
        let q_check = chk("q", q, Some(printed_q));
        // solve (s+1)(st+1) = |P| for t at the tabulated s+1
        let s = s1 - 1;
        let solution = {
            let (st1, rem) = p.div_rem(&BigUint::from(s1));
            if rem.is_zero() {
                let (t, rem2) = (st1 - 1u32).div_rem(&BigUint::from(s));
                if rem2.is_zero() && !t.is_zero() {
                    Some(t)
                } else {
                    None
                }
            } else {
                None
            }
        };
        let mut checks = vec![
            q_check,
            chk("|P|", &p, Some(printed_p)),
            chk("integral t at s+1", solution.is_some(), Some(printed_sol)),
        ];
        if let Some(pt) = printed_tle {
            let tle = solution
                .as_ref()
                .map(|t| *t <= BigUint::from(s * s))
                .unwrap_or(false);
            checks.push(chk("t <= s^2", tle, Some(pt)));
        }
        rows.push(finish_row(format!("unitary case q={q}, s+1={s1}"), checks, note));
    }
    Ok(finish_report(TableId::Psu12, rows))
}

// ---- the candidate-pair bound table ----

struct PairRow {
    t: GroupOrderSpec,
    t_label: &'static str,
    tp: GroupOrderSpec,
    tp_label: &'static str,
    t1: &'static [u64],
    printed_bound: bool,
}

fn pair_row(
    t: GroupOrderSpec,
    t_label: &'static str,
    tp: GroupOrderSpec,
    tp_label: &'static str,
    t1: &'static [u64],
    printed_bound: bool,
) -> PairRow {
    PairRow { t, t_label, tp, tp_label, t1, printed_bound }
}

fn table_not_novelty() -> Result<SieveReport> {
    let data = vec![
        pair_row(POmegaPlus { n: 14, q: 2 }, "POmega14+(2)", Alt { n: 16 }, "A16", &[16], false),
        pair_row(PSp { n: 12, q: 2 }, "PSp12(2)", Sym { n: 14 }, "S14", &[14], false),
        pair_row(POmegaMinus { n: 10, q: 2 }, "POmega10-(2)", Alt { n: 12 }, "A12", &[12], false),
        pair_row(PSp { n: 8, q: 2 }, "PSp8(2)", Sym { n: 10 }, "S10", &[10], false),
        pair_row(POmegaPlus { n: 8, q: 2 }, "POmega8+(2)", Alt { n: 9 }, "A9", &[9], false),
        pair_row(POmegaOdd { n: 7, q: 3 }, "POmega7(3)", PSp { n: 6, q: 2 }, "PSp6(2)", &[28, 36], true),
        pair_row(POmegaOdd { n: 7, q: 3 }, "POmega7(3)", Sym { n: 9 }, "S9", &[9], false),
        pair_row(PSU { n: 6, q: 2 }, "PSU6(2)", Named("M22"), "M22", &[22], false),
        pair_row(
            PSp { n: 6, q: 2 },
            "PSp6(2)",
            Scaled(Box::new(PSU { n: 3, q: 3 }), 2),
            "PSU3(3).2",
            &[28],
            false,
        ),
        pair_row(PSL { n: 4, q: 2 }, "PSL4(2)", Alt { n: 7 }, "A7", &[7], false),
        pair_row(PSU { n: 4, q: 3 }, "PSU4(3)", Alt { n: 7 }, "A7", &[7], false),
        pair_row(PSU { n: 4, q: 3 }, "PSU4(3)", PSL { n: 3, q: 4 }, "PSL3(4)", &[21], false),
        pair_row(Alt { n: 6 }, "PSp4(2)'", Alt { n: 5 }, "A5", &[5, 6], false),
        pair_row(PSL { n: 3, q: 4 }, "PSL3(4)", Alt { n: 6 }, "A6", &[6], true),
        pair_row(PSL { n: 3, q: 4 }, "PSL3(4)", Alt { n: 6 }, "A6", &[10], false),
        pair_row(PSU { n: 3, q: 5 }, "PSU3(5)", Alt { n: 7 }, "A7", &[7], true),
        pair_row(PSU { n: 3, q: 5 }, "PSU3(5)", Named("M10"), "M10", &[10], true),
        pair_row(PSU { n: 3, q: 3 }, "PSU3(3)", PSL { n: 2, q: 7 }, "PSL2(7)", &[7, 8], false),
        pair_row(PSL { n: 2, q: 9 }, "PSL2(9)", Alt { n: 5 }, "A5", &[5, 6], false),
        pair_row(PSL { n: 2, q: 11 }, "PSL2(11)", Alt { n: 5 }, "A5", &[5, 6], false),
        pair_row(PSL { n: 2, q: 19 }, "PSL2(19)", Alt { n: 5 }, "A5", &[5, 6], true),
        // the Suzuki-stabilizer family, evaluated at sample parameters with
        // an odd exponent above 1 (the q = 2 instance lives in the leftover
        // table as the 5:4 case)
        pair_row(PSp { n: 4, q: 8 }, "PSp4(8)", Sz { q: 8 }, "Sz(8)", &[65], true),
        pair_row(PSp { n: 4, q: 32 }, "PSp4(32)", Sz { q: 32 }, "Sz(32)", &[1025], true),
    ];
    let mut rows = Vec::new();
    for r in data {
        let total = simple_group_order(&r.t)?;
        let stab = simple_group_order(&r.tp)?;
        let (n, rem) = total.div_rem(&stab);
        if !rem.is_zero() {
            return Err(Error::UnsupportedOrderSpec(format!("non-integral index for {}", r.t_label)));
        }
        let bound = r.t1.iter().any(|&t1| pbounds_check(&n, t1 - 1).holds);
        let checks = vec![
            chk("|T:T_P|", &n, None::<&str>),
            chk("window bound", bound, Some(r.printed_bound)),
        ];
        rows.push(finish_row(
            format!("{} / {}, t+1 in {:?}", r.t_label, r.tp_label, r.t1),
            checks,
            None,
        ));
    }
    Ok(finish_report(TableId::NotNovelty, rows))
}

// ---- the discriminant table for the surviving pairs ----

fn table_delta() -> Result<SieveReport> {
    struct DeltaRow {
        t: GroupOrderSpec,
        tp: GroupOrderSpec,
        label: &'static str,
        t1: u64,
        printed_delta: Option<u64>,
        note: Option<&'static str>,
    }
    let data = vec![
        DeltaRow {
            t: POmegaOdd { n: 7, q: 3 },
            tp: PSp { n: 6, q: 2 },
            label: "POmega7(3) / PSp6(2), t+1=28",
            t1: 28,
            printed_delta: Some(341_848),
            note: None,
        },
        DeltaRow {
            t: POmegaOdd { n: 7, q: 3 },
            tp: PSp { n: 6, q: 2 },
            label: "POmega7(3) / PSp6(2), t+1=36",
            t1: 36,
            printed_delta: None,
            note: Some("no value printed for this valency; the recomputed 443416 appears printed on the following row"),
        },
        DeltaRow {
            t: PSL { n: 3, q: 4 },
            tp: Alt { n: 6 },
            label: "PSL3(4) / A6, t+1=6",
            t1: 6,
            printed_delta: Some(443_416),
            note: Some("printed value appears shifted up by one row; the recomputed discriminant of this pair is 1136"),
        },
        DeltaRow {
            t: PSU { n: 3, q: 5 },
            tp: Alt { n: 7 },
            label: "PSU3(5) / A7, t+1=7",
            t1: 7,
            printed_delta: Some(1_136),
            note: Some("printed value appears shifted up by one row; the recomputed discriminant 1225 = 35^2 is square yet gives the non-integral s = 7/3"),
        },
        DeltaRow {
            t: PSU { n: 3, q: 5 },
            tp: Named("M10"),
            label: "PSU3(5) / M10, t+1=10",
            t1: 10,
            printed_delta: Some(6_364),
            note: None,
        },
        DeltaRow {
            t: PSL { n: 2, q: 19 },
            tp: Alt { n: 5 },
            label: "PSL2(19) / A5, t+1=5",
            t1: 5,
            printed_delta: Some(921),
            note: None,
        },
        DeltaRow {
            t: PSL { n: 2, q: 19 },
            tp: Alt { n: 5 },
            label: "PSL2(19) / A5, t+1=6",
            t1: 6,
            printed_delta: Some(1_156),
            note: Some("square discriminant, but s = 28/10 is not an integer"),
        },
    ];
    let mut rows = Vec::new();
    for r in data {
        let total = simple_group_order(&r.t)?;
        let stab = simple_group_order(&r.tp)?;
        let (n, rem) = total.div_rem(&stab);
        if !rem.is_zero() {
            return Err(Error::UnsupportedOrderSpec(format!("non-integral index for {}", r.label)));
        }
        let sol = solve_order_equation(&n, &BigUint::from(r.t1 - 1));
        let mut checks = vec![chk("|T:T_P|", &n, None::<&str>)];
        checks.push(chk("Delta", &sol.delta, r.printed_delta));
        checks.push(chk("Delta square", sol.delta_is_square, None::<&str>));
        checks.push(chk("integral s", sol.s.is_some(), Some(false)));
        rows.push(finish_row(r.label.to_string(), checks, r.note.map(str::to_string)));
    }
    // the Suzuki family row carries a closed-form discriminant; evaluate it
    // at sample parameters
    for q in [8u64, 32] {
        let total = simple_group_order(&PSp { n: 4, q })?;
        let stab = simple_group_order(&Sz { q })?;
        let (n, _) = total.div_rem(&stab);
        let sol = solve_order_equation(&n, &BigUint::from(q * q));
        let b = BigUint::from(q);
        let closed = (&b - 1u32)
            * (&b + 1u32).pow(2)
            * (BigUint::from(4u32) * b.pow(4) + &b - 1u32);
        let checks = vec![
            chk("|T:T_P|", &n, None::<&str>),
            chk("Delta", &sol.delta, Some(&closed)),
            chk("integral s", sol.s.is_some(), Some(false)),
        ];
        rows.push(finish_row(
            format!("PSp4({q}) / Sz({q}), t+1={}", q * q + 1),
            checks,
            Some("closed form (q-1)(q+1)^2(4q^4+q-1)".to_string()),
        ));
    }
    Ok(finish_report(TableId::Delta, rows))
}

// ---- orthogonal q-part tables ----

type OrderFn = fn(u64) -> BigUint;

fn o3(q: u64) -> BigUint {
    let b = BigUint::from(q);
    &b * (b.pow(2) - 1u32)
}
fn o4plus(q: u64) -> BigUint {
    let b = BigUint::from(q);
    b.pow(2) * (b.pow(2) - 1u32).pow(2)
}
fn o4minus(q: u64) -> BigUint {
    let b = BigUint::from(q);
    b.pow(2) * (b.pow(4) - 1u32)
}
fn o6plus(q: u64) -> BigUint {
    let b = BigUint::from(q);
    b.pow(6) * (b.pow(3) - 1u32) * (b.pow(4) - 1u32) * (b.pow(2) - 1u32)
}
fn o2minus(q: u64) -> BigUint {
    BigUint::from(q + 1)
}

struct QPartRow {
    label: &'static str,
    total: fn(u64) -> GroupOrderSpec,
    stab: Vec<OrderFn>,
    /// stabilizer factors evaluated at q^2 instead of q
    squares: bool,
    t1: fn(u64) -> BigUint,
    exp_t: u32,
    exp_tp: u32,
    /// printed claim that the q-part of s+1 exceeds t+1 (the elimination);
    /// false only for the one row handled by a separate argument
    printed_exceeds: bool,
}

fn qpart_rows(id: TableId, data: Vec<QPartRow>) -> Result<SieveReport> {
    let mut rows = Vec::new();
    for r in data {
        for q in [3u64, 5] {
            let total = simple_group_order(&(r.total)(q))?;
            let arg = if r.squares { q * q } else { q };
            let stab: BigUint = r.stab.iter().map(|f| f(arg)).product();
            let tq = q_part(&total, q)?;
            let tpq = q_part(&stab, q)?;
            let b = BigUint::from(q);
            let exp_s = r.exp_t - r.exp_tp;
            let s1q = b.pow(exp_s);
            let t1 = (r.t1)(q);
            let exceeds = s1q > t1;
            let checks = vec![
                chk("|T|_q", &tq, Some(b.pow(r.exp_t))),
                chk("|T_P|_q", &tpq, Some(b.pow(r.exp_tp))),
                chk("(s+1)_q", &tq / &tpq, Some(&s1q)),
                chk("t+1", &t1, None::<&str>),
                chk("(s+1)_q > t+1", exceeds, Some(r.printed_exceeds)),
            ];
            rows.push(finish_row(format!("{} at q={q}", r.label), checks, None));
        }
    }
    Ok(finish_report(id, rows))
}

fn table_o1() -> Result<SieveReport> {
    fn t1_q2p1(q: u64) -> BigUint {
        BigUint::from(q * q + 1)
    }
    fn t1_qp1(q: u64) -> BigUint {
        BigUint::from(q + 1)
    }
    fn t1_proj3(q: u64) -> BigUint {
        BigUint::from(q * q * q + q * q + q + 1)
    }
    let data = vec![
        QPartRow {
            label: "dim 7, stabilizer O4- x O3",
            total: |q| POmegaOdd { n: 7, q },
            stab: vec![o4minus, o3],
            squares: false,
            t1: t1_q2p1,
            exp_t: 9,
            exp_tp: 3,
            printed_exceeds: true,
        },
        QPartRow {
            label: "dim 7, stabilizer O4+ x O3",
            total: |q| POmegaOdd { n: 7, q },
            stab: vec![o4plus, o3],
            squares: false,
            t1: t1_qp1,
            exp_t: 9,
            exp_tp: 3,
            printed_exceeds: true,
        },
        QPartRow {
            label: "dim 7, stabilizer O6+",
            total: |q| POmegaOdd { n: 7, q },
            stab: vec![o6plus],
            squares: false,
            t1: t1_proj3,
            exp_t: 9,
            exp_tp: 6,
            printed_exceeds: false,
        },
        QPartRow {
            label: "dim 8 minus, stabilizer O4- x O4+",
            total: |q| POmegaMinus { n: 8, q },
            stab: vec![o4minus, o4plus],
            squares: false,
            t1: t1_q2p1,
            exp_t: 12,
            exp_tp: 4,
            printed_exceeds: true,
        },
        QPartRow {
            label: "dim 8 minus, stabilizer O6+ x O2-",
            total: |q| POmegaMinus { n: 8, q },
            stab: vec![o6plus, o2minus],
            squares: false,
            t1: t1_proj3,
            exp_t: 12,
            exp_tp: 6,
            printed_exceeds: true,
        },
        QPartRow {
            label: "dim 8 plus, stabilizer O4- x O4-",
            total: |q| POmegaPlus { n: 8, q },
            stab: vec![o4minus, o4minus],
            squares: false,
            t1: t1_q2p1,
            exp_t: 12,
            exp_tp: 4,
            printed_exceeds: true,
        },
        QPartRow {
            label: "dim 9, stabilizer O6+ x O3",
            total: |q| POmegaOdd { n: 9, q },
            stab: vec![o6plus, o3],
            squares: false,
            t1: t1_proj3,
            exp_t: 16,
            exp_tp: 7,
            printed_exceeds: true,
        },
        QPartRow {
            label: "dim 10 minus, stabilizer O6+ x O4-",
            total: |q| POmegaMinus { n: 10, q },
            stab: vec![o6plus, o4minus],
            squares: false,
            t1: t1_proj3,
            exp_t: 20,
            exp_tp: 8,
            printed_exceeds: true,
        },
        QPartRow {
            label: "dim 12 plus, stabilizer O6+ x O6+",
            total: |q| POmegaPlus { n: 12, q },
            stab: vec![o6plus, o6plus],
            squares: false,
            t1: t1_proj3,
            exp_t: 30,
            exp_tp: 12,
            printed_exceeds: true,
        },
    ];
    qpart_rows(TableId::O1, data)
}

fn table_o2() -> Result<SieveReport> {
    let data = vec![
        QPartRow {
            label: "dim 8 plus, stabilizer O4+(q^2)",
            total: |q| POmegaPlus { n: 8, q },
            stab: vec![o4plus],
            squares: true,
            t1: |q| BigUint::from(q * q + 1),
            exp_t: 12,
            exp_tp: 4,
            printed_exceeds: true,
        },
        QPartRow {
            label: "dim 8 minus, stabilizer O4-(q^2)",
            total: |q| POmegaMinus { n: 8, q },
            stab: vec![o4minus],
            squares: true,
            t1: |q| BigUint::from(q * q * q * q + 1),
            exp_t: 12,
            exp_tp: 4,
            printed_exceeds: true,
        },
        QPartRow {
            label: "dim 12 plus, stabilizer O6+(q^2)",
            total: |q| POmegaPlus { n: 12, q },
            stab: vec![o6plus],
            squares: true,
            t1: |q| {
                let b = BigUint::from(q);
                (b.pow(8) - 1u32) / (b.pow(2) - 1u32)
            },
            exp_t: 30,
            exp_tp: 12,
            printed_exceeds: true,
        },
    ];
    qpart_rows(TableId::O2, data)
}

// ---- the left-over small cases ----

fn table_leftover() -> Result<SieveReport> {
    let mut rows = Vec::new();

    // numeric bound rows at the matrix-group level
    struct BoundRow {
        label: &'static str,
        total: BigUint,
        stab: u64,
        t1: &'static [u64],
        printed_n: u64,
        printed_bound: bool,
    }
    let two = BigUint::from(2u32);
    let bound_rows = vec![
        BoundRow {
            label: "Omega8+(3) / 2^7:A8",
            total: &two * simple_group_order(&POmegaPlus { n: 8, q: 3 })?,
            stab: 2_580_480,
            t1: &[8],
            printed_n: 3_838_185,
            printed_bound: false,
        },
        BoundRow {
            label: "Omega6-(3) / (1/4)GO2-(3)^3.S3",
            total: &two * simple_group_order(&PSU { n: 4, q: 3 })?,
            stab: 768,
            t1: &[3, 4],
            printed_n: 8_505,
            printed_bound: false,
        },
        BoundRow {
            label: "SU6(2) / 3^5.S6",
            total: BigUint::from(3u32) * simple_group_order(&PSU { n: 6, q: 2 })?,
            stab: 174_960,
            t1: &[6],
            printed_n: 157_696,
            printed_bound: false,
        },
        BoundRow {
            label: "Sp4(2) / 5:4",
            total: simple_group_order(&PSp { n: 4, q: 2 })?,
            stab: 20,
            t1: &[5],
            printed_n: 36,
            printed_bound: true,
        },
        BoundRow {
            label: "SU4(3) / 4^3.S4",
            total: BigUint::from(4u32) * simple_group_order(&PSU { n: 4, q: 3 })?,
            stab: 1_536,
            t1: &[3, 4],
            printed_n: 8_505,
            printed_bound: false,
        },
        BoundRow {
            label: "SL4(3) / SL2(3)^2:2.2",
            total: &two * simple_group_order(&PSL { n: 4, q: 3 })?,
            stab: 2_304,
            t1: &[3],
            printed_n: 5_265,
            printed_bound: false,
        },
        BoundRow {
            label: "Omega3(11) / A4",
            total: simple_group_order(&POmegaOdd { n: 3, q: 11 })?,
            stab: 12,
            t1: &[4],
            printed_n: 55,
            printed_bound: true,
        },
        BoundRow {
            label: "Omega3(19) / A4",
            total: simple_group_order(&POmegaOdd { n: 3, q: 19 })?,
            stab: 12,
            t1: &[4],
            printed_n: 285,
            printed_bound: false,
        },
        BoundRow {
            label: "SU3(5) / 3 x PSL2(7)",
            total: BigUint::from(3u32) * simple_group_order(&PSU { n: 3, q: 5 })?,
            stab: 504,
            t1: &[7, 8],
            printed_n: 750,
            printed_bound: false,
        },
        BoundRow {
            label: "SU3(5) / 6^2:S3",
            total: BigUint::from(3u32) * simple_group_order(&PSU { n: 3, q: 5 })?,
            stab: 216,
            t1: &[3, 4],
            printed_n: 1_750,
            printed_bound: false,
        },
    ];
    for r in bound_rows {
        let (n, rem) = r.total.div_rem(&BigUint::from(r.stab));
        if !rem.is_zero() {
            return Err(Error::UnsupportedOrderSpec(format!("non-integral index for {}", r.label)));
        }
        let bound = r.t1.iter().any(|&t1| pbounds_check(&n, t1 - 1).holds);
        let checks = vec![
            chk("index", &n, Some(r.printed_n)),
            chk("window bound", bound, Some(r.printed_bound)),
        ];
        rows.push(finish_row(format!("{}, t+1 in {:?}", r.label, r.t1), checks, None));
    }

    // the two surviving cases, eliminated by the degree-d discriminant
    struct DiscRow {
        label: &'static str,
        d: u64,
        t: u64,
        printed_delta: u64,
    }
    for r in [
        DiscRow { label: "Omega3(11) / A4, d=55, t=3", d: 55, t: 3, printed_delta: 664 },
        DiscRow { label: "Sp4(2) / 5:4, d=36, t=4", d: 36, t: 4, printed_delta: 585 },
    ] {
        let delta = crate::sieve::discriminant_td(&BigUint::from(r.t), &BigUint::from(r.d));
        let (square, _) = crate::sieve::is_perfect_square(&delta);
        let checks = vec![
            chk("Delta_td", &delta, Some(r.printed_delta)),
            chk("square", square, Some(false)),
        ];
        rows.push(finish_row(r.label.to_string(), checks, None));
    }
    Ok(finish_report(TableId::Leftover, rows))
}
