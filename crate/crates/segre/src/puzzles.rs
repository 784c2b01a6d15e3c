//! Knutson-Tao puzzle enumeration for d=1 with position-dependent
//! fugacities, puzzle-sum structure constants, ASCII rendering, and
//! positivity certificates.
//!
//! Geometry: the size-n triangular region is a staircase of cells (c, r)
//! with c + r <= n-1. Cells off the anti-diagonal are rhombi; cells on it
//! are the bottom-row up-triangles. Every cell has a top edge H(c,r)
//! (parallel to the NW side) and a left edge V(c,r) (parallel to the NE
//! side); anti-diagonal cells carry the diagonal edge D(c) on the south
//! side. Boundary labels: lambda_k = H(n-k, 0), mu_k = V(0, k-1),
//! nu_k = D(n-k). The rhombus at (c, r) sits on diagonals (a, b) =
//! (r+1, n-c) and its fugacity argument is z_b/z_a in the K-picture and
//! x_{y_b - y_a} in the connective picture.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::report::SuiteReport;
use crate::sym::{
    q_beta, q_beta_connective, RationalFunction, SymError, VariableTable,
};
use crate::weyl::{LabeledString, ThetaShape};

/// An edge label of the d=1 puzzle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    One,
    Zero,
    Ten,
}

impl Label {
    pub fn from_digit(d: u8) -> Label {
        match d {
            0 => Label::Zero,
            1 => Label::One,
            _ => panic!("single-number labels are 0 or 1"),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::One => write!(f, "1"),
            Label::Zero => write!(f, "0"),
            Label::Ten => write!(f, "10"),
        }
    }
}

impl FromStr for Label {
    type Err = SymError;
    fn from_str(s: &str) -> Result<Self, SymError> {
        match s {
            "1" => Ok(Label::One),
            "0" => Ok(Label::Zero),
            "10" => Ok(Label::Ten),
            other => Err(SymError::Parse(format!("bad edge label {other:?}"))),
        }
    }
}

/// Fugacity classes of the rhombus tiles. The same classes fill the colored
/// R-matrices, evaluated there at shifted arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FugClass {
    /// 1
    Unit,
    /// Q(b,q)
    QPiece,
    /// b(1-q^2)/(Q - q^2 z)
    BetaSmall,
    /// q(1-z)/(Q - q^2 z)
    QOneMinus,
    /// b(1-q^2) z/(Q - q^2 z)
    BetaSmallZ,
    /// b q(q^2-1)/(Q - q^2 z)
    BetaQNeg,
    /// q Q(1-z)/(Q - q^2 z)
    QQOneMinus,
    /// b Q(q^2-1) z/(q(Q - q^2 z))
    BetaQQNegZ,
}

/// Which fugacity table to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Picture {
    K,
    Connective,
}

/// The fugacity template over the placeholder table of the picture
/// (`b, q, z` in the K-picture; `b, xq, z` with z standing for an x_lambda
/// in the connective picture).
pub fn fugacity_template(class: FugClass, picture: Picture) -> RationalFunction {
    match picture {
        Picture::K => {
            let t = VariableTable::k_template();
            let one = RationalFunction::one(&t);
            let b = RationalFunction::symbol(&t, "b");
            let q = RationalFunction::symbol(&t, "q");
            let z = RationalFunction::symbol(&t, "z");
            let q2 = q.pow(2).unwrap();
            let big_q = q_beta(&t);
            let den = &big_q - &(&q2 * &z);
            match class {
                FugClass::Unit => one,
                FugClass::QPiece => big_q,
                FugClass::BetaSmall => (&(&b * &(&one - &q2)) / &den).unwrap(),
                FugClass::QOneMinus => (&(&q * &(&one - &z)) / &den).unwrap(),
                FugClass::BetaSmallZ => (&(&(&b * &(&one - &q2)) * &z) / &den).unwrap(),
                FugClass::BetaQNeg => (&(&(&b * &q) * &(&q2 - &one)) / &den).unwrap(),
                FugClass::QQOneMinus => (&(&(&q * &big_q) * &(&one - &z)) / &den).unwrap(),
                FugClass::BetaQQNegZ => {
                    let num = &(&(&b * &big_q) * &(&q2 - &one)) * &z;
                    (&num / &(&q * &den)).unwrap()
                }
            }
        }
        Picture::Connective => {
            let t = VariableTable::connective_template();
            let one = RationalFunction::one(&t);
            let b = RationalFunction::symbol(&t, "b");
            let xq = RationalFunction::symbol(&t, "xq");
            let z = RationalFunction::symbol(&t, "z");
            let x2 = xq.pow(2).unwrap();
            let big_q = q_beta_connective(&t);
            // 1 - xq^2 (1 - z)
            let den = &one - &(&x2 * &(&one - &z));
            match class {
                FugClass::Unit => one,
                FugClass::QPiece => big_q,
                FugClass::BetaSmall => (&(&one - &x2) / &den).unwrap(),
                FugClass::QOneMinus => (&(&xq * &z) / &den).unwrap(),
                FugClass::BetaSmallZ => {
                    let num = &(&one - &x2) * &(&one - &(&b * &z));
                    (&num / &den).unwrap()
                }
                FugClass::BetaQNeg => (&(&xq * &(&x2 - &one)) / &den).unwrap(),
                FugClass::QQOneMinus => (&(&(&xq * &big_q) * &z) / &den).unwrap(),
                FugClass::BetaQQNegZ => {
                    let num = &(&big_q * &(&x2 - &one)) * &(&one - &(&b * &z));
                    (&num / &(&xq * &den)).unwrap()
                }
            }
        }
    }
}

/// A rhombus catalog entry: (right, bottom, left, top) edge labels and the
/// fugacity class.
pub const RHOMBI: [(Label, Label, Label, Label, FugClass); 15] = {
    use FugClass::*;
    use Label::*;
    [
        (Zero, Zero, Zero, Zero, Unit),
        (One, One, One, One, Unit),
        (Zero, One, Zero, One, Unit),
        (One, Ten, One, Ten, Unit),
        (Ten, Zero, Ten, Zero, Unit),
        (Ten, Ten, Ten, Ten, QPiece),
        (One, Ten, Zero, Zero, BetaSmall),
        (Ten, Zero, One, One, BetaSmall),
        (One, Zero, One, Zero, QOneMinus),
        (One, One, Ten, Zero, BetaSmallZ),
        (Zero, Zero, One, Ten, BetaSmallZ),
        (Ten, Ten, Zero, One, BetaQNeg),
        (Zero, Ten, Zero, Ten, QQOneMinus),
        (Ten, One, Ten, One, QQOneMinus),
        (Zero, One, Ten, Ten, BetaQQNegZ),
    ]
};

/// Up-triangle catalog entries: (top, diag, left) labels and the fugacity
/// (1 except for the all-10 tile). The 1 10 0 tile and the all-10 tile can
/// only occur with a 10 on the south boundary, so they never appear in a
/// filled puzzle; they matter for the D/U factorization only.
pub const UP_TRIANGLES: [(Label, Label, Label, bool); 6] = {
    use Label::*;
    [
        (Zero, Zero, Zero, true),
        (One, One, One, true),
        (Zero, One, Ten, true),
        (Ten, Zero, One, true),
        (One, Ten, Zero, true),
        (Ten, Ten, Ten, false), // fugacity -Q/q
    ]
};

/// Down-triangle catalog: same label triples, unit fugacity except the
/// all-10 tile at -q. Present for the factorization lemma; never tiles a
/// puzzle.
pub const DOWN_TRIANGLES: [(Label, Label, Label, bool); 6] = UP_TRIANGLES;

/// A complete edge assignment of the size-n region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuzzleFilling {
    n: usize,
    /// h[r][c] for c + r <= n-1.
    h: Vec<Vec<Label>>,
    /// v[r][c] for c + r <= n-1.
    v: Vec<Vec<Label>>,
    /// d[c] at cell (c, n-1-c).
    d: Vec<Label>,
}

/// One placed rhombus: position and edge labels.
#[derive(Clone, Copy, Debug)]
pub struct PlacedRhombus {
    pub c: usize,
    pub r: usize,
    pub right: Label,
    pub bottom: Label,
    pub left: Label,
    pub top: Label,
    pub class: FugClass,
}

impl PuzzleFilling {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self, c: usize, r: usize) -> Label {
        self.h[r][c]
    }

    pub fn v(&self, c: usize, r: usize) -> Label {
        self.v[r][c]
    }

    pub fn d(&self, c: usize) -> Label {
        self.d[c]
    }

    pub fn lambda(&self) -> LabeledString {
        boundary_string((1..=self.n).map(|k| self.h[0][self.n - k]))
    }

    pub fn mu(&self) -> LabeledString {
        boundary_string((1..=self.n).map(|k| self.v[k - 1][0]))
    }

    pub fn nu(&self) -> LabeledString {
        boundary_string((1..=self.n).map(|k| self.d[self.n - k]))
    }

    /// All rhombus cells with their labels and catalog classes.
    pub fn rhombi(&self) -> Vec<PlacedRhombus> {
        let mut out = Vec::new();
        for r in 0..self.n {
            for c in 0..self.n {
                if c + r + 2 > self.n {
                    continue;
                }
                let (right, bottom, left, top) = (
                    self.v[r][c + 1],
                    self.h[r + 1][c],
                    self.v[r][c],
                    self.h[r][c],
                );
                let class = RHOMBI
                    .iter()
                    .find(|(a, b, cc, dd, _)| {
                        *a == right && *b == bottom && *cc == left && *dd == top
                    })
                    .map(|(_, _, _, _, f)| *f)
                    .unwrap_or_else(|| {
                        panic!("invalid rhombus at ({c},{r}): {right} {bottom} {left} {top}")
                    });
                out.push(PlacedRhombus {
                    c,
                    r,
                    right,
                    bottom,
                    left,
                    top,
                    class,
                });
            }
        }
        out
    }

    /// Spectral binding of the rhombus at (c, r): z <- z_b/z_a in the
    /// K-picture, z <- x_{y_b-y_a} = (t_b - t_a)/(1 - b t_a) in the
    /// connective picture, with (a, b) = (r+1, n-c).
    pub fn spectral_binding(
        &self,
        c: usize,
        r: usize,
        picture: Picture,
        table: &Arc<VariableTable>,
    ) -> RationalFunction {
        let a = r + 1;
        let b = self.n - c;
        match picture {
            Picture::K => {
                let za = RationalFunction::symbol(table, &format!("z{a}"));
                let zb = RationalFunction::symbol(table, &format!("z{b}"));
                (&zb / &za).unwrap()
            }
            Picture::Connective => {
                let ta = RationalFunction::symbol(table, &format!("t{a}"));
                let tb = RationalFunction::symbol(table, &format!("t{b}"));
                let one = RationalFunction::one(table);
                let bb = RationalFunction::symbol(table, "b");
                (&(&tb - &ta) / &(&one - &(&bb * &ta))).unwrap()
            }
        }
    }

    /// Product of the rhombus fugacities at their positions. Triangles in a
    /// valid filling all have fugacity 1.
    pub fn fugacity(&self, picture: Picture, table: &Arc<VariableTable>) -> RationalFunction {
        let mut acc = RationalFunction::one(table);
        for rh in self.rhombi() {
            if rh.class == FugClass::Unit {
                continue;
            }
            let template = fugacity_template(rh.class, picture);
            let binding = self.spectral_binding(rh.c, rh.r, picture, table);
            let mut map: BTreeMap<&str, RationalFunction> = BTreeMap::new();
            map.insert("z", binding);
            if picture == Picture::Connective {
                // xq and b pass through by name.
            }
            let value = template
                .substitute_into(table, &map)
                .expect("fugacity specialization is well-defined");
            acc = &acc * &value;
        }
        acc
    }

    /// Deterministic ASCII form: two lines per row r, the first with the
    /// top-edge labels of the row and its anti-diagonal label, the second
    /// with the left-edge labels. `parse` inverts `render` exactly.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in 0..self.n {
            let width = self.n - r;
            let hs: Vec<String> = (0..width).map(|c| self.h[r][c].to_string()).collect();
            out.push_str(&format!("h {} d {}\n", hs.join(" "), self.d[width - 1]));
            let vs: Vec<String> = (0..width).map(|c| self.v[r][c].to_string()).collect();
            out.push_str(&format!("v {}\n", vs.join(" ")));
        }
        out
    }

    pub fn parse(text: &str) -> Result<PuzzleFilling, SymError> {
        let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        if lines.len() % 2 != 0 || lines.is_empty() {
            return Err(SymError::Parse("expected 2n nonempty lines".into()));
        }
        let n = lines.len() / 2;
        let mut h = Vec::with_capacity(n);
        let mut v = Vec::with_capacity(n);
        let mut d = vec![Label::Zero; n];
        for r in 0..n {
            let hline: Vec<&str> = lines[2 * r].split_whitespace().collect();
            let vline: Vec<&str> = lines[2 * r + 1].split_whitespace().collect();
            let width = n - r;
            if hline.len() != width + 3 || hline[0] != "h" || hline[width + 1] != "d" {
                return Err(SymError::Parse(format!("bad h-line at row {r}")));
            }
            if vline.len() != width + 1 || vline[0] != "v" {
                return Err(SymError::Parse(format!("bad v-line at row {r}")));
            }
            let hrow: Result<Vec<Label>, _> =
                hline[1..=width].iter().map(|s| s.parse()).collect();
            let vrow: Result<Vec<Label>, _> =
                vline[1..=width].iter().map(|s| s.parse()).collect();
            h.push(hrow?);
            v.push(vrow?);
            d[width - 1] = hline[width + 2].parse()?;
        }
        Ok(PuzzleFilling { n, h, v, d })
    }
}

fn boundary_string(labels: impl Iterator<Item = Label>) -> LabeledString {
    LabeledString::new(
        labels
            .map(|l| match l {
                Label::Zero => 0u8,
                Label::One => 1,
                Label::Ten => panic!("boundary labels are single numbers"),
            })
            .collect(),
    )
}

/// All fillings of the size-n region with boundary (lambda NW, mu NE,
/// nu S), found by a depth-first scan over cells in row-major order with
/// branching in fixed catalog order, so the output order is deterministic.
pub fn enumerate(
    lambda: &LabeledString,
    mu: &LabeledString,
    nu: &LabeledString,
) -> Vec<PuzzleFilling> {
    let n = lambda.len();
    assert_eq!(mu.len(), n);
    assert_eq!(nu.len(), n);
    // Catalog lookup keyed by (top, left).
    let mut by_top_left: BTreeMap<(Label, Label), Vec<(Label, Label)>> = BTreeMap::new();
    for (right, bottom, left, top, _) in RHOMBI {
        by_top_left.entry((top, left)).or_default().push((right, bottom));
    }
    let mut filling = PuzzleFilling {
        n,
        h: (0..n).map(|r| vec![Label::Zero; n - r]).collect(),
        v: (0..n).map(|r| vec![Label::Zero; n - r]).collect(),
        d: vec![Label::Zero; n],
    };
    for k in 1..=n {
        filling.h[0][n - k] = Label::from_digit(lambda.get(k - 1));
        filling.v[k - 1][0] = Label::from_digit(mu.get(k - 1));
        filling.d[n - k] = Label::from_digit(nu.get(k - 1));
    }
    let mut out = Vec::new();
    fill_cells(0, 0, &mut filling, &by_top_left, &mut out);
    out
}

fn fill_cells(
    r: usize,
    c: usize,
    filling: &mut PuzzleFilling,
    by_top_left: &BTreeMap<(Label, Label), Vec<(Label, Label)>>,
    out: &mut Vec<PuzzleFilling>,
) {
    let n = filling.n;
    if r == n {
        out.push(filling.clone());
        return;
    }
    let width = n - r;
    if c == width {
        fill_cells(r + 1, 0, filling, by_top_left, out);
        return;
    }
    let top = filling.h[r][c];
    let left = filling.v[r][c];
    if c == width - 1 {
        // Anti-diagonal up-triangle: all three edges fixed; check validity.
        let diag = filling.d[c];
        let ok = UP_TRIANGLES
            .iter()
            .any(|&(t, d, l, _)| t == top && d == diag && l == left);
        if ok {
            fill_cells(r, c + 1, filling, by_top_left, out);
        }
        return;
    }
    let Some(options) = by_top_left.get(&(top, left)) else {
        return;
    };
    for &(right, bottom) in options {
        filling.v[r][c + 1] = right;
        filling.h[r + 1][c] = bottom;
        fill_cells(r, c + 1, filling, by_top_left, out);
    }
}

/// The puzzle-sum structure constant: the fugacity sum over all fillings.
pub fn puzzle_constant(
    lambda: &LabeledString,
    mu: &LabeledString,
    nu: &LabeledString,
    picture: Picture,
    table: &Arc<VariableTable>,
) -> RationalFunction {
    let mut acc = RationalFunction::zero(table);
    for p in enumerate(lambda, mu, nu) {
        acc = &acc + &p.fugacity(picture, table);
    }
    acc
}

/// Generators of the positivity monoid (K-picture): -q^{±1}, Q(b,q), the
/// spectral ratio e^{-a}, G1 = b(1-q^2)/(Q-q^2 e^{-a}), and
/// G2 = -(1-e^{-a})/(Q-q^2 e^{-a}).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PosGen {
    NegQ,
    NegQInv,
    BigQ,
    EAlpha,
    G1,
    G2,
}

impl PosGen {
    pub fn template(&self, table: &Arc<VariableTable>) -> RationalFunction {
        let one = RationalFunction::one(table);
        let q = RationalFunction::symbol(table, "q");
        let z = RationalFunction::symbol(table, "z");
        let big_q = q_beta(table);
        let q2 = q.pow(2).unwrap();
        let den = &big_q - &(&q2 * &z);
        match self {
            PosGen::NegQ => -&q,
            PosGen::NegQInv => -&q.inverse().unwrap(),
            PosGen::BigQ => big_q,
            PosGen::EAlpha => z,
            PosGen::G1 => {
                let b = RationalFunction::symbol(table, "b");
                (&(&b * &(&one - &q2)) / &den).unwrap()
            }
            PosGen::G2 => -&(&(&one - &z) / &den).unwrap(),
        }
    }
}

/// Rewriting of each rhombus fugacity class as a product of monoid
/// generators. Fixed per catalog entry; checked symbolically by
/// [`verify_positivity_catalog`].
pub fn positivity_generators(class: FugClass) -> &'static [PosGen] {
    use PosGen::*;
    match class {
        FugClass::Unit => &[],
        FugClass::QPiece => &[BigQ],
        FugClass::BetaSmall => &[G1],
        FugClass::QOneMinus => &[NegQ, G2],
        FugClass::BetaSmallZ => &[EAlpha, G1],
        FugClass::BetaQNeg => &[NegQ, G1],
        FugClass::QQOneMinus => &[NegQ, BigQ, G2],
        FugClass::BetaQQNegZ => &[NegQInv, BigQ, EAlpha, G1],
    }
}

/// The per-rhombus membership witness of a filling's fugacity.
pub fn positivity_certificate(p: &PuzzleFilling) -> Vec<(usize, usize, Vec<PosGen>)> {
    p.rhombi()
        .into_iter()
        .map(|rh| (rh.c, rh.r, positivity_generators(rh.class).to_vec()))
        .collect()
}

/// Check symbolically that every rewriting reproduces its fugacity class.
pub fn verify_positivity_catalog() -> SuiteReport {
    let mut report = SuiteReport::new("positivity");
    let t = VariableTable::k_template();
    for (_, _, _, _, class) in RHOMBI {
        let fug = fugacity_template(class, Picture::K);
        let mut prod = RationalFunction::one(&t);
        for g in positivity_generators(class) {
            prod = &prod * &g.template(&t);
        }
        report.check(format!("{class:?} rewrites into the monoid"), prod.eq_sym(&fug));
    }
    report
}
