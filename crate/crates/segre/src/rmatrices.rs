//! The colored R/U/D matrix catalog and the complete Yang-Baxter,
//! bootstrap, unitarity, equal-parameter, and factorization suites.
//!
//! Matrices are stored as data tables from label pairs to fugacity
//! references so that transcription errors localize. The nine-dimensional
//! space is ordered (1,1),(1,0),(1,10),(0,1),(0,0),(0,10),(10,1),(10,0),
//! (10,10); rows index the incoming pair, columns the outgoing pair, and
//! the first tensor slot is the first-listed strand.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::puzzles::{fugacity_template, FugClass, Label, Picture};
use crate::report::SuiteReport;
use crate::sym::{q_beta, RationalFunction, SymbolicMatrix, VariableTable};

pub const LABELS: [Label; 3] = [Label::One, Label::Zero, Label::Ten];

fn label_index(l: Label) -> usize {
    match l {
        Label::One => 0,
        Label::Zero => 1,
        Label::Ten => 2,
    }
}

pub fn pair_index(a: Label, b: Label) -> usize {
    3 * label_index(a) + label_index(b)
}

/// Multiplier applied on top of a fugacity entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mult {
    None,
    /// times the display variable z
    Z,
    /// times 1/z
    ZInv,
}

#[derive(Clone, Copy, Debug)]
enum REntry {
    One,
    Q,
    F {
        class: FugClass,
        /// argument 1/z instead of z
        inverted: bool,
        mult: Mult,
    },
}

use FugClass::*;
use Label::{One as L1, Ten as L10, Zero as L0};

type Row = ((Label, Label), (Label, Label), REntry);

fn f(class: FugClass) -> REntry {
    REntry::F {
        class,
        inverted: false,
        mult: Mult::None,
    }
}

fn finv(class: FugClass) -> REntry {
    REntry::F {
        class,
        inverted: true,
        mult: Mult::None,
    }
}

fn finv_mult(class: FugClass, mult: Mult) -> REntry {
    REntry::F {
        class,
        inverted: true,
        mult,
    }
}

/// R_{g,r}: the rhombus fugacity table itself.
fn gr_entries() -> Vec<Row> {
    vec![
        ((L1, L1), (L1, L1), REntry::One),
        ((L1, L1), (L0, L10), f(BetaSmallZ)),
        ((L1, L0), (L0, L1), f(QOneMinus)),
        ((L1, L10), (L0, L0), f(BetaSmall)),
        ((L1, L10), (L10, L1), REntry::One),
        ((L0, L1), (L1, L0), REntry::One),
        ((L0, L1), (L10, L10), f(BetaQQNegZ)),
        ((L0, L0), (L0, L0), REntry::One),
        ((L0, L0), (L10, L1), f(BetaSmallZ)),
        ((L0, L10), (L10, L0), f(QQOneMinus)),
        ((L10, L1), (L1, L10), f(QQOneMinus)),
        ((L10, L0), (L1, L1), f(BetaSmall)),
        ((L10, L0), (L0, L10), REntry::One),
        ((L10, L10), (L1, L0), f(BetaQNeg)),
        ((L10, L10), (L10, L10), REntry::Q),
    ]
}

fn gg_entries() -> Vec<Row> {
    vec![
        ((L1, L1), (L1, L1), REntry::One),
        ((L1, L0), (L1, L0), finv(BetaSmallZ)),
        ((L1, L0), (L0, L1), finv(QQOneMinus)),
        ((L1, L10), (L1, L10), finv(BetaSmallZ)),
        ((L1, L10), (L10, L1), finv(QQOneMinus)),
        ((L0, L1), (L1, L0), finv(QOneMinus)),
        ((L0, L1), (L0, L1), finv(BetaSmall)),
        ((L0, L0), (L0, L0), REntry::One),
        ((L0, L10), (L0, L10), finv(BetaSmallZ)),
        ((L0, L10), (L10, L0), finv(QOneMinus)),
        ((L10, L1), (L1, L10), finv(QOneMinus)),
        ((L10, L1), (L10, L1), finv(BetaSmall)),
        ((L10, L0), (L0, L10), finv(QQOneMinus)),
        ((L10, L0), (L10, L0), finv(BetaSmall)),
        ((L10, L10), (L10, L10), REntry::One),
    ]
}

fn rr_entries() -> Vec<Row> {
    vec![
        ((L1, L1), (L1, L1), REntry::One),
        ((L1, L0), (L1, L0), finv(BetaSmallZ)),
        ((L1, L0), (L0, L1), finv(QQOneMinus)),
        ((L1, L10), (L1, L10), finv(BetaSmall)),
        ((L1, L10), (L10, L1), finv(QQOneMinus)),
        ((L0, L1), (L1, L0), finv(QOneMinus)),
        ((L0, L1), (L0, L1), finv(BetaSmall)),
        ((L0, L0), (L0, L0), REntry::One),
        ((L0, L10), (L0, L10), finv(BetaSmall)),
        ((L0, L10), (L10, L0), finv(QOneMinus)),
        ((L10, L1), (L1, L10), finv(QOneMinus)),
        ((L10, L1), (L10, L1), finv(BetaSmallZ)),
        ((L10, L0), (L0, L10), finv(QQOneMinus)),
        // printed as Q(f_{1,1}^{0,10}(1/z)); the unitarity equation forces
        // the plain f_{1,1}^{0,10}(1/z), and the Yang-Baxter and bootstrap
        // suites confirm it
        ((L10, L0), (L10, L0), finv(BetaSmallZ)),
        ((L10, L10), (L10, L10), REntry::One),
    ]
}

fn bb_entries() -> Vec<Row> {
    vec![
        ((L1, L1), (L1, L1), REntry::One),
        ((L1, L0), (L1, L0), finv(BetaSmallZ)),
        ((L1, L0), (L0, L1), finv(QQOneMinus)),
        ((L1, L10), (L1, L10), finv(BetaSmallZ)),
        ((L1, L10), (L10, L1), finv(QQOneMinus)),
        ((L0, L1), (L1, L0), finv(QOneMinus)),
        ((L0, L1), (L0, L1), finv(BetaSmall)),
        ((L0, L0), (L0, L0), REntry::One),
        ((L0, L10), (L0, L10), finv(BetaSmall)),
        ((L0, L10), (L10, L0), finv(QOneMinus)),
        ((L10, L1), (L1, L10), finv(QOneMinus)),
        ((L10, L1), (L10, L1), finv(BetaSmall)),
        ((L10, L0), (L0, L10), finv(QQOneMinus)),
        ((L10, L0), (L10, L0), finv(BetaSmallZ)),
        ((L10, L10), (L10, L10), REntry::One),
    ]
}

fn br_entries() -> Vec<Row> {
    vec![
        ((L1, L1), (L1, L1), REntry::One),
        ((L1, L0), (L0, L1), REntry::One),
        ((L1, L10), (L1, L0), finv(BetaSmallZ)),
        ((L1, L10), (L0, L10), finv_mult(BetaQQNegZ, Mult::Z)),
        ((L1, L10), (L10, L1), finv(QQOneMinus)),
        ((L0, L1), (L1, L0), finv(QOneMinus)),
        // the row with two identical printed entries, transcribed verbatim
        ((L0, L1), (L0, L10), finv(BetaSmall)),
        ((L0, L1), (L10, L1), finv(BetaSmall)),
        ((L0, L0), (L0, L0), REntry::One),
        ((L0, L10), (L10, L0), REntry::One),
        ((L10, L1), (L1, L10), REntry::One),
        ((L10, L0), (L1, L0), finv(BetaSmallZ)),
        ((L10, L0), (L0, L10), finv(QQOneMinus)),
        ((L10, L0), (L10, L1), finv_mult(BetaQNeg, Mult::ZInv)),
        ((L10, L10), (L10, L10), REntry::Q),
    ]
}

fn gb_entries() -> Vec<Row> {
    vec![
        ((L1, L1), (L1, L1), REntry::One),
        ((L1, L0), (L0, L1), REntry::One),
        ((L1, L10), (L1, L0), finv(BetaSmallZ)),
        ((L1, L10), (L0, L10), finv_mult(BetaQNeg, Mult::ZInv)),
        ((L1, L10), (L10, L1), finv(QQOneMinus)),
        ((L0, L1), (L1, L0), finv(QOneMinus)),
        ((L0, L1), (L0, L10), finv(BetaSmall)),
        ((L0, L1), (L10, L1), finv(BetaSmall)),
        ((L0, L0), (L0, L0), REntry::One),
        ((L0, L10), (L10, L0), REntry::One),
        ((L10, L1), (L1, L10), REntry::One),
        ((L10, L0), (L1, L0), finv(BetaSmallZ)),
        ((L10, L0), (L0, L10), finv(QQOneMinus)),
        ((L10, L0), (L10, L1), finv_mult(BetaQQNegZ, Mult::Z)),
        ((L10, L10), (L10, L10), REntry::Q),
    ]
}

/// The fugacity templates live over (b, q, z); bind z to the display
/// argument and map into the working table.
fn eval_entry(
    entry: &REntry,
    zdisp: &RationalFunction,
    table: &Arc<VariableTable>,
) -> RationalFunction {
    match entry {
        REntry::One => RationalFunction::one(table),
        REntry::Q => q_beta(table),
        REntry::F {
            class,
            inverted,
            mult,
        } => {
            let arg = if *inverted {
                zdisp.inverse().expect("nonzero display argument")
            } else {
                zdisp.clone()
            };
            let template = fugacity_template(*class, Picture::K);
            let mut bind: BTreeMap<&str, RationalFunction> = BTreeMap::new();
            bind.insert("z", arg);
            let mut v = template
                .substitute_into(table, &bind)
                .expect("entry specialization is well-defined");
            match mult {
                Mult::None => {}
                Mult::Z => v = &v * zdisp,
                Mult::ZInv => v = &v * &zdisp.inverse().unwrap(),
            }
            v
        }
    }
}

fn assemble(rows: &[Row], zdisp: &RationalFunction, table: &Arc<VariableTable>) -> SymbolicMatrix {
    let mut m = SymbolicMatrix::zero(table, 9, 9);
    for ((r1, r2), (c1, c2), entry) in rows {
        m.set(
            pair_index(*r1, *r2),
            pair_index(*c1, *c2),
            eval_entry(entry, zdisp, table),
        );
    }
    m
}

/// Strand color pairs. The second-listed color crosses over the first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColorPair {
    GR,
    RG,
    BR,
    RB,
    GB,
    BG,
    GG,
    RR,
    BB,
}

/// Build a colored R-matrix at the given spectral argument. The display
/// tables carry fugacities in the variable z; the function argument s
/// relates to it by the color-dependent shift printed with each display
/// (z/q^2 for g-r, z/q for b-r and g-b, z itself for the single-color
/// ones). R_{r,g}, R_{r,b}, R_{b,g} are symbolic inverses of their
/// partners at the reciprocal argument.
pub fn build(pair: ColorPair, s: &RationalFunction) -> SymbolicMatrix {
    let table = s.table().clone();
    let q = RationalFunction::symbol(&table, "q");
    match pair {
        ColorPair::GR => assemble(&gr_entries(), &(&q.pow(2).unwrap() * s), &table),
        ColorPair::BR => assemble(&br_entries(), &(&q * s), &table),
        ColorPair::GB => assemble(&gb_entries(), &(&q * s), &table),
        ColorPair::GG => assemble(&gg_entries(), s, &table),
        ColorPair::RR => assemble(&rr_entries(), s, &table),
        ColorPair::BB => assemble(&bb_entries(), s, &table),
        ColorPair::RG => build(ColorPair::GR, &s.inverse().unwrap())
            .inverse()
            .expect("R_gr is nonsingular"),
        ColorPair::RB => build(ColorPair::BR, &s.inverse().unwrap())
            .inverse()
            .expect("R_br is nonsingular"),
        ColorPair::BG => build(ColorPair::GB, &s.inverse().unwrap())
            .inverse()
            .expect("R_gb is nonsingular"),
    }
}

/// D(beta): 9x3, fusing blue into the red-green pair; entries 0, 1, -q.
pub fn d_matrix(table: &Arc<VariableTable>) -> SymbolicMatrix {
    let one = RationalFunction::one(table);
    let neg_q = -&RationalFunction::symbol(table, "q");
    let mut m = SymbolicMatrix::zero(table, 9, 3);
    m.set(pair_index(L1, L1), label_index(L1), one.clone());
    m.set(pair_index(L1, L10), label_index(L0), one.clone());
    m.set(pair_index(L0, L1), label_index(L10), one.clone());
    m.set(pair_index(L0, L0), label_index(L0), one.clone());
    m.set(pair_index(L10, L0), label_index(L1), one);
    m.set(pair_index(L10, L10), label_index(L10), neg_q);
    m
}

/// U(beta): 3x9, splitting blue from the green-red pair; entries 0, 1, -Q/q.
pub fn u_matrix(table: &Arc<VariableTable>) -> SymbolicMatrix {
    let one = RationalFunction::one(table);
    let q = RationalFunction::symbol(table, "q");
    let neg_q_over = -&(&q_beta(table) / &q).unwrap();
    let mut m = SymbolicMatrix::zero(table, 3, 9);
    m.set(label_index(L1), pair_index(L1, L1), one.clone());
    m.set(label_index(L1), pair_index(L0, L10), one.clone());
    m.set(label_index(L0), pair_index(L0, L0), one.clone());
    m.set(label_index(L0), pair_index(L10, L1), one);
    m.set(label_index(L10), pair_index(L1, L0), RationalFunction::one(table));
    m.set(label_index(L10), pair_index(L10, L10), neg_q_over);
    m
}

/// One Yang-Baxter factor: the color pair, the spectral argument
/// q^{qpow} z_i / z_j, and the tensor slot (true = first).
type Factor = (ColorPair, usize, usize, i32, bool);

fn arg(table: &Arc<VariableTable>, i: usize, j: usize, qpow: i32) -> RationalFunction {
    let zi = RationalFunction::symbol(table, &format!("z{i}"));
    let zj = RationalFunction::symbol(table, &format!("z{j}"));
    let q = RationalFunction::symbol(table, "q");
    &(&zi / &zj).unwrap() * &q.pow(qpow).unwrap()
}

fn ybe_side(table: &Arc<VariableTable>, factors: &[Factor]) -> SymbolicMatrix {
    let id3 = SymbolicMatrix::identity(table, 3);
    let mut acc: Option<SymbolicMatrix> = None;
    for &(pair, i, j, qpow, first) in factors {
        let r = build(pair, &arg(table, i, j, qpow));
        let m = if first {
            r.kronecker(&id3)
        } else {
            id3.kronecker(&r)
        };
        acc = Some(match acc {
            None => m,
            Some(a) => &a * &m,
        });
    }
    acc.unwrap()
}

/// The 24 Yang-Baxter equations, with the spectral arguments as listed.
#[rustfmt::skip]
fn ybe_equations() -> Vec<(String, [Factor; 3], [Factor; 3])> {
    use ColorPair::*;
    let eqs: Vec<([Factor; 3], [Factor; 3])> = vec![
        ([(RG,3,2,2,true),(RG,3,1,2,false),(RR,2,1,0,true)],
         [(RR,2,1,0,false),(RG,3,1,2,true),(RG,3,2,2,false)]),
        ([(GR,3,2,-2,true),(RR,3,1,0,false),(RG,2,1,2,true)],
         [(RG,2,1,2,false),(RR,3,1,0,true),(GR,3,2,-2,false)]),
        ([(RR,3,2,0,true),(GR,3,1,-2,false),(GR,2,1,-2,true)],
         [(GR,2,1,-2,false),(GR,3,1,-2,true),(RR,3,2,0,false)]),
        ([(GR,3,2,-2,true),(GR,3,1,-2,false),(GG,2,1,0,true)],
         [(GG,2,1,0,false),(GR,3,1,-2,true),(GR,3,2,-2,false)]),
        ([(RG,3,2,2,true),(GG,3,1,0,false),(GR,2,1,-2,true)],
         [(GR,2,1,-2,false),(GG,3,1,0,true),(RG,3,2,2,false)]),
        ([(GG,3,2,0,true),(RG,3,1,2,false),(RG,2,1,2,true)],
         [(RG,2,1,2,false),(RG,3,1,2,true),(GG,3,2,0,false)]),
        ([(BR,3,2,-1,true),(BR,3,1,-1,false),(BB,2,1,0,true)],
         [(BB,2,1,0,false),(BR,3,1,-1,true),(BR,3,2,-1,false)]),
        ([(RB,3,2,1,true),(BB,3,1,0,false),(BR,2,1,-1,true)],
         [(BR,2,1,-1,false),(BB,3,1,0,true),(RB,3,2,1,false)]),
        ([(BB,3,2,0,true),(RB,3,1,1,false),(RB,2,1,1,true)],
         [(RB,2,1,1,false),(RB,3,1,1,true),(BB,3,2,0,false)]),
        ([(RB,3,2,1,true),(RB,3,1,1,false),(RR,2,1,0,true)],
         [(RR,2,1,0,false),(RB,3,1,1,true),(RB,3,2,1,false)]),
        ([(BR,3,2,-1,true),(RR,3,1,0,false),(RB,2,1,1,true)],
         [(RB,2,1,1,false),(RR,3,1,0,true),(BR,3,2,-1,false)]),
        ([(RR,3,2,0,true),(BR,3,1,-1,false),(BR,2,1,-1,true)],
         [(BR,2,1,-1,false),(BR,3,1,-1,true),(RR,3,2,0,false)]),
        ([(BB,3,2,0,true),(GB,3,1,-1,false),(GB,2,1,-1,true)],
         [(GB,2,1,-1,false),(GB,3,1,-1,true),(BB,3,2,0,false)]),
        ([(GB,3,2,-1,true),(BB,3,1,0,false),(BG,2,1,1,true)],
         [(BG,2,1,1,false),(BB,3,1,0,true),(GB,3,2,-1,false)]),
        ([(BG,3,2,1,true),(BG,3,1,1,false),(BB,2,1,0,true)],
         [(BB,2,1,0,false),(BG,3,1,1,true),(BG,3,2,1,false)]),
        ([(GB,3,2,-1,true),(GB,3,1,-1,false),(GG,2,1,0,true)],
         [(GG,2,1,0,false),(GB,3,1,-1,true),(GB,3,2,-1,false)]),
        ([(BG,3,2,1,true),(GG,3,1,0,false),(GB,2,1,-1,true)],
         [(GB,2,1,-1,false),(GG,3,1,0,true),(BG,3,2,1,false)]),
        ([(GG,3,2,0,true),(BG,3,1,1,false),(BG,2,1,1,true)],
         [(BG,2,1,1,false),(BG,3,1,1,true),(GG,3,2,0,false)]),
        ([(GB,3,2,-1,true),(RB,3,1,1,false),(RG,2,1,2,true)],
         [(RG,2,1,2,false),(RB,3,1,1,true),(GB,3,2,-1,false)]),
        ([(BG,3,2,1,true),(RG,3,1,2,false),(RB,2,1,1,true)],
         [(RB,2,1,1,false),(RG,3,1,2,true),(BG,3,2,1,false)]),
        ([(RG,3,2,2,true),(BG,3,1,1,false),(BR,2,1,-1,true)],
         [(BR,2,1,-1,false),(BG,3,1,1,true),(RG,3,2,2,false)]),
        ([(GR,3,2,-2,true),(BR,3,1,-1,false),(BG,2,1,1,true)],
         [(BG,2,1,1,false),(BR,3,1,-1,true),(GR,3,2,-2,false)]),
        ([(RB,3,2,1,true),(GB,3,1,-1,false),(GR,2,1,-2,true)],
         [(GR,2,1,-2,false),(GB,3,1,-1,true),(RB,3,2,1,false)]),
        ([(BR,3,2,-1,true),(GR,3,1,-2,false),(GB,2,1,-1,true)],
         [(GB,2,1,-1,false),(GR,3,1,-2,true),(BR,3,2,-1,false)]),
    ];
    eqs.into_iter()
        .enumerate()
        .map(|(k, (l, r))| (format!("ybe-{:02}", k + 1), l, r))
        .collect()
}

pub fn verify_ybe_suite() -> SuiteReport {
    let table = VariableTable::k_classes(3);
    let mut report = SuiteReport::new("ybe");
    let results: Vec<(String, bool, Option<String>)> = ybe_equations()
        .par_iter()
        .map(|(name, lhs, rhs)| {
            let l = ybe_side(&table, lhs);
            let r = ybe_side(&table, rhs);
            match l.first_difference(&r) {
                None => (name.clone(), true, None),
                Some((i, j)) => (
                    name.clone(),
                    false,
                    Some(format!("first differing entry ({i},{j})")),
                ),
            }
        })
        .collect();
    for (name, pass, detail) in results {
        match detail {
            Some(d) => report.check_detail(name, pass, d),
            None => report.check(name, pass),
        }
    }
    report
}

pub fn verify_bootstrap_suite() -> SuiteReport {
    use ColorPair::*;
    let t = VariableTable::k_classes(2);
    let mut report = SuiteReport::new("bootstrap");
    let id3 = SymbolicMatrix::identity(&t, 3);
    let u = u_matrix(&t);
    let d = d_matrix(&t);
    let r = |pair: ColorPair, i: usize, j: usize, qpow: i32| build(pair, &arg(&t, i, j, qpow));

    let eqs: Vec<(String, SymbolicMatrix, SymbolicMatrix)> = vec![
        (
            "u-br".into(),
            &r(BR, 2, 1, -1) * &u.kronecker(&id3),
            &(&id3.kronecker(&u) * &r(GR, 2, 1, -2).kronecker(&id3)) * &id3.kronecker(&r(RR, 2, 1, 0)),
        ),
        (
            "u-bg".into(),
            &r(BG, 2, 1, 1) * &u.kronecker(&id3),
            &(&id3.kronecker(&u) * &r(GG, 2, 1, 0).kronecker(&id3)) * &id3.kronecker(&r(RG, 2, 1, 2)),
        ),
        (
            "u-bb".into(),
            &r(BB, 2, 1, 0) * &u.kronecker(&id3),
            &(&id3.kronecker(&u) * &r(GB, 2, 1, -1).kronecker(&id3)) * &id3.kronecker(&r(RB, 2, 1, 1)),
        ),
        (
            "u-rb".into(),
            &r(RB, 2, 1, 1) * &id3.kronecker(&u),
            &(&u.kronecker(&id3) * &id3.kronecker(&r(RR, 2, 1, 0))) * &r(RG, 2, 1, 2).kronecker(&id3),
        ),
        (
            "u-gb".into(),
            &r(GB, 2, 1, -1) * &id3.kronecker(&u),
            &(&u.kronecker(&id3) * &id3.kronecker(&r(GR, 2, 1, -2))) * &r(GG, 2, 1, 0).kronecker(&id3),
        ),
        (
            "u-bb-second".into(),
            &r(BB, 2, 1, 0) * &id3.kronecker(&u),
            &(&u.kronecker(&id3) * &id3.kronecker(&r(BR, 2, 1, -1))) * &r(BG, 2, 1, 1).kronecker(&id3),
        ),
        (
            "d-br".into(),
            &id3.kronecker(&d) * &r(BR, 2, 1, -1),
            &(&r(RR, 2, 1, 0).kronecker(&id3) * &id3.kronecker(&r(GR, 2, 1, -2))) * &d.kronecker(&id3),
        ),
        (
            "d-bg".into(),
            &id3.kronecker(&d) * &r(BG, 2, 1, 1),
            &(&r(RG, 2, 1, 2).kronecker(&id3) * &id3.kronecker(&r(GG, 2, 1, 0))) * &d.kronecker(&id3),
        ),
        (
            "d-bb".into(),
            &id3.kronecker(&d) * &r(BB, 2, 1, 0),
            &(&r(RB, 2, 1, 1).kronecker(&id3) * &id3.kronecker(&r(GB, 2, 1, -1))) * &d.kronecker(&id3),
        ),
        (
            "d-rb".into(),
            &d.kronecker(&id3) * &r(RB, 2, 1, 1),
            &(&id3.kronecker(&r(RG, 2, 1, 2)) * &r(RR, 2, 1, 0).kronecker(&id3)) * &id3.kronecker(&d),
        ),
        (
            "d-gb".into(),
            &d.kronecker(&id3) * &r(GB, 2, 1, -1),
            &(&id3.kronecker(&r(GG, 2, 1, 0)) * &r(GR, 2, 1, -2).kronecker(&id3)) * &id3.kronecker(&d),
        ),
        (
            "d-bb-second".into(),
            &d.kronecker(&id3) * &r(BB, 2, 1, 0),
            &(&id3.kronecker(&r(BG, 2, 1, 1)) * &r(BR, 2, 1, -1).kronecker(&id3)) * &id3.kronecker(&d),
        ),
    ];
    for (name, lhs, rhs) in eqs {
        match lhs.first_difference(&rhs) {
            None => report.check(name, true),
            Some((i, j)) => {
                report.check_detail(name, false, format!("first differing entry ({i},{j})"))
            }
        }
    }
    report
}

pub fn verify_unitarity_suite() -> SuiteReport {
    use ColorPair::*;
    let t = VariableTable::k_classes(2);
    let mut report = SuiteReport::new("unitarity");
    let id9 = SymbolicMatrix::identity(&t, 9);
    let r = |pair: ColorPair, i: usize, j: usize, qpow: i32| build(pair, &arg(&t, i, j, qpow));
    let eqs: Vec<(String, SymbolicMatrix)> = vec![
        ("rr".into(), &r(RR, 2, 1, 0) * &r(RR, 1, 2, 0)),
        ("gg".into(), &r(GG, 2, 1, 0) * &r(GG, 1, 2, 0)),
        ("bb".into(), &r(BB, 2, 1, 0) * &r(BB, 1, 2, 0)),
        ("rg-gr".into(), &r(RG, 2, 1, 2) * &r(GR, 1, 2, -2)),
        ("bg-gb".into(), &r(BG, 2, 1, 1) * &r(GB, 1, 2, -1)),
        ("rb-br".into(), &r(RB, 2, 1, 1) * &r(BR, 1, 2, -1)),
    ];
    for (name, prod) in eqs {
        report.check(name, prod.eq_sym(&id9));
    }
    report
}

pub fn verify_equal_parameter_suite() -> SuiteReport {
    let t = VariableTable::k_classes(1);
    let mut report = SuiteReport::new("equal");
    let one = RationalFunction::one(&t);
    let id9 = SymbolicMatrix::identity(&t, 9);
    for (name, pair) in [
        ("gg", ColorPair::GG),
        ("rr", ColorPair::RR),
        ("bb", ColorPair::BB),
    ] {
        report.check(name, build(pair, &one).eq_sym(&id9));
    }
    report
}

/// Rank-3 degeneration and the D*U factorization. The degeneration point
/// is the fusion point where the paired green and red strands carry equal
/// z, i.e. the display variable (a ratio of spectral parameters) equals 1;
/// the additive spectral difference of the lemma's statement is zero there.
pub fn verify_factorization() -> SuiteReport {
    let t = VariableTable::k_classes(1);
    let mut report = SuiteReport::new("factorization");
    let q = RationalFunction::symbol(&t, "q");
    let fusion = q.pow(-2).unwrap(); // display z = q^2 * q^{-2} = 1
    let degenerate = build(ColorPair::GR, &fusion);
    report.check("rank 3", degenerate.rank() == 3);
    let du = &d_matrix(&t) * &u_matrix(&t);
    match degenerate.first_difference(&du) {
        None => report.check("D*U factorization", true),
        Some((i, j)) => report.check_detail(
            "D*U factorization",
            false,
            format!("first differing entry ({i},{j})"),
        ),
    }
    // Substitution commutes: the factorization also holds at beta = 1.
    let mut bind: BTreeMap<&str, RationalFunction> = BTreeMap::new();
    bind.insert("b", RationalFunction::one(&t));
    let lhs = degenerate.map(|e| e.substitute(&bind).unwrap());
    let rhs = du.map(|e| e.substitute(&bind).unwrap());
    report.check("beta=1 specialization", lhs.eq_sym(&rhs));
    report
}

/// Single-color crossings preserve single numbers: nonzero entries connect
/// {0,1} pairs to {0,1} pairs, and a repeated single number on one side
/// forces the same single number everywhere.
pub fn verify_single_number_props() -> SuiteReport {
    let t = VariableTable::k_classes(2);
    let mut report = SuiteReport::new("single-numbers");
    let s = arg(&t, 2, 1, 0);
    for (name, pair) in [
        ("gg", ColorPair::GG),
        ("rr", ColorPair::RR),
        ("bb", ColorPair::BB),
    ] {
        let m = build(pair, &s);
        let mut preserve = true;
        let mut force = true;
        for (a, b, c, d) in all_label_quads() {
            let entry = m.get(pair_index(a, b), pair_index(c, d));
            if entry.is_zero() {
                continue;
            }
            let single_in = a != Label::Ten && b != Label::Ten;
            let single_out = c != Label::Ten && d != Label::Ten;
            if single_in != single_out {
                preserve = false;
            }
            if a == b && a != Label::Ten && !(c == a && d == a) {
                force = false;
            }
            if c == d && c != Label::Ten && !(a == c && b == c) {
                force = false;
            }
        }
        report.check(format!("{name} preserves single numbers"), preserve);
        report.check(format!("{name} forces i=j=k"), force);
    }
    // Spot checks from the displays.
    let m = build(ColorPair::GG, &s);
    report.check(
        "gg entry (0,10)<-(1,1) vanishes",
        m.get(pair_index(L0, L10), pair_index(L1, L1)).is_zero(),
    );
    let m = build(ColorPair::RR, &s);
    report.check(
        "rr entry (1,1)<-(1,1) is 1",
        m.get(pair_index(L1, L1), pair_index(L1, L1)).is_one(),
    );
    report
}

fn all_label_quads() -> Vec<(Label, Label, Label, Label)> {
    let mut out = Vec::with_capacity(81);
    for &a in &LABELS {
        for &b in &LABELS {
            for &c in &LABELS {
                for &d in &LABELS {
                    out.push((a, b, c, d));
                }
            }
        }
    }
    out
}

/// Nonsingularity record: determinants of the six displayed matrices, with
/// monomial content stripped, reported but not asserted beyond nonzeroness.
pub fn determinant_notes() -> SuiteReport {
    let t = VariableTable::k_classes(2);
    let s = arg(&t, 2, 1, 0);
    let mut report = SuiteReport::new("determinants");
    for (name, pair) in [
        ("gr", ColorPair::GR),
        ("br", ColorPair::BR),
        ("gb", ColorPair::GB),
        ("gg", ColorPair::GG),
        ("rr", ColorPair::RR),
        ("bb", ColorPair::BB),
    ] {
        let det = build(pair, &s).determinant();
        report.check_detail(
            format!("det R_{name} nonzero"),
            !det.is_zero(),
            format!("det = {det}"),
        );
    }
    report
}

/// Everything of the appendix in one report.
pub fn verify_appendix_suite() -> SuiteReport {
    let mut report = SuiteReport::new("appendix");
    report.merge(verify_ybe_suite());
    report.merge(verify_bootstrap_suite());
    report.merge(verify_unitarity_suite());
    report.merge(verify_equal_parameter_suite());
    report
}
