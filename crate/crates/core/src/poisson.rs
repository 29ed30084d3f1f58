//! The classical truncated Yangian as a Poisson algebra.
//!
//! The mode brackets `{T_m^{ij}, T_n^{kl}}` are *derived*, not hard-coded:
//! both sides of the generating-function relation
//!
//! ```text
//! {L1(u), L2(v)} = [r12(u-v), L1(u) L2(v)],    r(x) = P12 / x
//! ```
//!
//! are expanded symbolically with `L(u) = sum_n u^{-n} T_n`, the right side
//! is divided exactly by `(u - v)`, and coefficients of `u^{-m} v^{-n}` are
//! equated. The resulting [`BracketTable`] is the single source of truth
//! for every symbolic bracket in the crate; producing it doubles as a
//! consistency check because the exact division fails loudly if the
//! commutator numerator does not vanish at `u = v`.

use std::collections::BTreeMap;

use crate::error::CoreError;
use crate::matrix::RingMatrix;
use crate::poly::{BiPoly, Ring};
use crate::scalar::Scalar;
use crate::signature::{GeneratorIndex, Signature};
use crate::superpoly::SuperPolyElement;

/// Derived Poisson structure constants for the mode brackets.
///
/// Entries are stored for all ordered pairs with `1 <= m, n <= cap`; each
/// value is a polynomial in generators of level `<= m + n - 1`.
#[derive(Clone, Debug)]
pub struct BracketTable {
    sig: Signature,
    cap: u32,
    entries: BTreeMap<(GeneratorIndex, GeneratorIndex), SuperPolyElement>,
}

type SPoly = BiPoly<SuperPolyElement>;

fn sp_unit(sig: Signature) -> SuperPolyElement {
    SuperPolyElement::one(sig)
}

fn poly_unit(sig: Signature) -> SPoly {
    BiPoly::constant(sp_unit(sig), sp_unit(sig))
}

/// `L(u)` as an auxiliary-space matrix over the symbol ring, expanded to
/// mode level `level_cap`, in the variable `x = u^{-1}` (or `y = v^{-1}`).
fn generating_matrix(sig: Signature, level_cap: u32, use_y: bool) -> RingMatrix<SPoly> {
    let d = sig.total();
    let unit = poly_unit(sig);
    let mut m = RingMatrix::zero(d, unit);
    for i in 1..=d {
        for j in 1..=d {
            let mut entry = BiPoly::zero(sp_unit(sig));
            if i == j {
                entry = entry.add(&BiPoly::constant(sp_unit(sig), sp_unit(sig)));
            }
            for n in 1..=level_cap {
                let gen = SuperPolyElement::generator(sig, GeneratorIndex::new(n, i, j));
                let (xe, ye) = if use_y { (0, n) } else { (n, 0) };
                entry = entry.add(&BiPoly::term(sp_unit(sig), xe, ye, gen));
            }
            m.set(i - 1, j - 1, entry);
        }
    }
    m
}

impl BracketTable {
    /// Derive all mode brackets with `m, n <= cap`.
    pub fn derive(sig: Signature, cap: u32) -> Result<Self, CoreError> {
        assert!(cap >= 1);
        let d = sig.total();
        // L(u) must carry enough modes that every total degree read off a
        // requested coefficient is complete: {T_m, T_n} reads the total
        // degree m+n-1 part of the commutator, so 2*cap modes suffice.
        let level_cap = 2 * cap;
        let l1 = {
            // L1 = graded tensor L (x) I: entry ((i,k),(j,l)) =
            // (-1)^{([i]+[j])[k]} L^{ij}(u) delta_{kl}
            let lu = generating_matrix(sig, level_cap, false);
            let mut m = RingMatrix::zero(d * d, poly_unit(sig));
            for (&(i0, j0), v) in lu.entries() {
                let pij = sig.parity(i0 + 1) ^ sig.parity(j0 + 1);
                for k0 in 0..d {
                    let val = if pij & sig.parity(k0 + 1) == 1 {
                        v.neg()
                    } else {
                        v.clone()
                    };
                    m.set(i0 * d + k0, j0 * d + k0, val);
                }
            }
            m
        };
        let l2 = {
            // L2 = I (x) L(v): no sign
            let lv = generating_matrix(sig, level_cap, true);
            let mut m = RingMatrix::zero(d * d, poly_unit(sig));
            for (&(k0, l0), v) in lv.entries() {
                for i0 in 0..d {
                    m.set(i0 * d + k0, i0 * d + l0, v.clone());
                }
            }
            m
        };
        let p = crate::rmatrix::build_permutation(&sig).map_entries(poly_unit(sig), |s| {
            BiPoly::constant(sp_unit(sig), sp_unit(sig).scale(s))
        });
        let prod = l1.mul(&l2);
        let numerator = p.mul(&prod).sub(&prod.mul(&p));

        // divisor u - v = (y - x)/(x y) in x = 1/u, y = 1/v: the bracket is
        // -x y * numerator / (x - y); division proceeds per entry.
        let xmy = BiPoly::var_x(Scalar::one()).sub(&BiPoly::var_y(Scalar::one()));
        let mut entries = BTreeMap::new();
        for i in 1..=d {
            for j in 1..=d {
                for k in 1..=d {
                    for l in 1..=d {
                        let row = (i - 1) * d + (k - 1);
                        let col = (j - 1) * d + (l - 1);
                        let raw = numerator.get(row, col);
                        // only complete total degrees participate; higher
                        // ones are artifacts of the finite mode window
                        let complete = raw.truncate_total_degree(level_cap);
                        let quot = complete.divide_exact(&xmy).map_err(|e| {
                            CoreError::NonDivisibleEntry {
                                row,
                                col,
                                remainder: e.remainder.to_string(),
                            }
                        })?;
                        // {L^{ij}(u), L^{kl}(v)} = sign * (-xy) * quot
                        let pij = sig.parity(i) ^ sig.parity(j);
                        let sign_flip = pij & sig.parity(k) == 1;
                        for m in 1..=cap {
                            for n in 1..=cap {
                                let mut c = quot.coeff(m - 1, n - 1).neg();
                                if sign_flip {
                                    c = c.neg();
                                }
                                if !c.is_zero() {
                                    entries.insert(
                                        (
                                            GeneratorIndex::new(m, i, j),
                                            GeneratorIndex::new(n, k, l),
                                        ),
                                        c,
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(BracketTable { sig, cap, entries })
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// `{g, h}` for single generators within the derived range.
    pub fn bracket_generators(&self, g: GeneratorIndex, h: GeneratorIndex) -> SuperPolyElement {
        assert!(
            g.level <= self.cap && h.level <= self.cap,
            "bracket ({g}, {h}) outside derived cap {}",
            self.cap
        );
        self.entries
            .get(&(g, h))
            .cloned()
            .unwrap_or_else(|| SuperPolyElement::zero(self.sig))
    }

    /// Replace one table entry (negative-control hook for the test suites).
    pub fn perturb_entry(&mut self, g: GeneratorIndex, h: GeneratorIndex, delta: SuperPolyElement) {
        let cur = self.bracket_generators(g, h);
        self.entries.insert((g, h), cur.add(&delta));
    }

    /// Graded antisymmetry of the whole table:
    /// `{x,y} = -(-1)^{p(x)p(y)} {y,x}`.
    pub fn check_antisymmetry(&self) -> Result<usize, String> {
        let mut checked = 0;
        for m in 1..=self.cap {
            for n in 1..=self.cap {
                for (g, h) in self.generator_pairs(m, n) {
                    let fwd = self.bracket_generators(g, h);
                    let bwd = self.bracket_generators(h, g);
                    let sign = g.parity(&self.sig) & h.parity(&self.sig);
                    let expected = if sign == 1 { bwd.clone() } else { bwd.neg() };
                    if fwd != expected {
                        return Err(format!(
                            "antisymmetry fails for ({g}, {h}): {{g,h}} = {fwd}, {{h,g}} = {bwd}"
                        ));
                    }
                    checked += 1;
                }
            }
        }
        Ok(checked)
    }

    /// Level filtration: `{T_m, T_n}` involves only levels `<= m+n-1`.
    pub fn check_level_bound(&self) -> Result<(), String> {
        for (&(g, h), v) in &self.entries {
            if v.max_level() > g.level + h.level - 1 {
                return Err(format!(
                    "bracket ({g}, {h}) = {v} exceeds level bound {}",
                    g.level + h.level - 1
                ));
            }
        }
        Ok(())
    }

    fn generator_pairs(
        &self,
        m: u32,
        n: u32,
    ) -> impl Iterator<Item = (GeneratorIndex, GeneratorIndex)> + '_ {
        let d = self.sig.total();
        (1..=d).flat_map(move |i| {
            (1..=d).flat_map(move |j| {
                (1..=d).flat_map(move |k| {
                    (1..=d)
                        .map(move |l| (GeneratorIndex::new(m, i, j), GeneratorIndex::new(n, k, l)))
                })
            })
        })
    }
}

/// The classical truncated Yangian: signature, truncation level and a
/// bracket table deep enough for the requested computations.
#[derive(Clone, Debug)]
pub struct TruncatedYangian {
    pub sig: Signature,
    pub p: u32,
    table: BracketTable,
}

impl TruncatedYangian {
    /// Build with a table derived to `cap` (defaults to the minimum needed
    /// for ideal-closure checks when `cap` is `None`).
    pub fn new(sig: Signature, p: u32, cap: Option<u32>) -> Result<Self, CoreError> {
        assert!(p >= 1);
        let cap = cap.unwrap_or(2 * p);
        Ok(TruncatedYangian {
            sig,
            p,
            table: BracketTable::derive(sig, cap)?,
        })
    }

    pub fn table(&self) -> &BracketTable {
        &self.table
    }

    /// Generators of the truncated algebra: `T_n^{ij}`, `1 <= n <= p`.
    pub fn generators(&self) -> Vec<GeneratorIndex> {
        generators_up_to(&self.sig, self.p)
    }

    pub fn generator_count(&self) -> usize {
        self.p as usize * self.sig.total() * self.sig.total()
    }

    /// Poisson bracket in the truncated algebra.
    pub fn bracket(&self, x: &SuperPolyElement, y: &SuperPolyElement) -> SuperPolyElement {
        poisson_bracket(x, y, &self.table, Some(self.p))
    }

    /// Poisson bracket without truncation (valid within the table cap).
    pub fn bracket_untruncated(
        &self,
        x: &SuperPolyElement,
        y: &SuperPolyElement,
    ) -> SuperPolyElement {
        poisson_bracket(x, y, &self.table, None)
    }
}

pub fn generators_up_to(sig: &Signature, level: u32) -> Vec<GeneratorIndex> {
    let d = sig.total();
    let mut out = Vec::new();
    for n in 1..=level {
        for i in 1..=d {
            for j in 1..=d {
                out.push(GeneratorIndex::new(n, i, j));
            }
        }
    }
    out
}

/// Bilinear, graded-antisymmetric, graded-Leibniz extension of the mode
/// bracket table. With `truncate = Some(p)` generators above level `p` are
/// zero and results are reduced to the quotient.
pub fn poisson_bracket(
    x: &SuperPolyElement,
    y: &SuperPolyElement,
    table: &BracketTable,
    truncate: Option<u32>,
) -> SuperPolyElement {
    let sig = table.signature();
    let (x, y) = match truncate {
        Some(p) => (x.truncate(p), y.truncate(p)),
        None => (x.clone(), y.clone()),
    };
    let mut out = SuperPolyElement::zero(sig);
    for (mx, cx) in x.terms() {
        for (my, cy) in y.terms() {
            let term = bracket_monomials(mx.generators(), my.generators(), table, sig);
            out = out.add(&term.scale(&(cx * cy)));
        }
    }
    match truncate {
        Some(p) => out.truncate(p),
        None => out,
    }
}

/// `{g1...gr, h1...hs}` by graded Leibniz on both sides.
fn bracket_monomials(
    xs: &[GeneratorIndex],
    ys: &[GeneratorIndex],
    table: &BracketTable,
    sig: Signature,
) -> SuperPolyElement {
    if xs.is_empty() || ys.is_empty() {
        return SuperPolyElement::zero(sig);
    }
    if xs.len() == 1 {
        let g = xs[0];
        if ys.len() == 1 {
            return table.bracket_generators(g, ys[0]);
        }
        // {g, h * rest} = {g, h} * rest + (-1)^{p(g)p(h)} h * {g, rest}
        let h = ys[0];
        let rest = &ys[1..];
        let rest_elem = SuperPolyElement::from_word(sig, rest, Scalar::one());
        let first = table.bracket_generators(g, h).mul(&rest_elem);
        let h_elem = SuperPolyElement::generator(sig, h);
        let second = h_elem.mul(&bracket_monomials(xs, rest, table, sig));
        let sign = g.parity(&sig) & h.parity(&sig);
        return if sign == 1 {
            first.sub(&second)
        } else {
            first.add(&second)
        };
    }
    // {g * rest, y} = g * {rest, y} + (-1)^{p(rest)p(y)} {g, y} * rest
    let g = xs[0];
    let rest = &xs[1..];
    let g_elem = SuperPolyElement::generator(sig, g);
    let first = g_elem.mul(&bracket_monomials(rest, ys, table, sig));
    let p_rest: u8 = rest.iter().fold(0, |a, r| a ^ r.parity(&sig));
    let p_y: u8 = ys.iter().fold(0, |a, r| a ^ r.parity(&sig));
    let rest_elem = SuperPolyElement::from_word(sig, rest, Scalar::one());
    let second = bracket_monomials(&[g], ys, table, sig).mul(&rest_elem);
    if p_rest & p_y == 1 {
        first.sub(&second)
    } else {
        first.add(&second)
    }
}

/// Counterexample payload for a failed structural check.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub location: String,
    pub value: String,
}

impl std::fmt::Display for Counterexample {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.location, self.value)
    }
}

/// Graded Jacobi identity over all generator triples with level at most
/// `level_bound`, in truncated (`Some(p)`) or untruncated mode.
pub fn verify_jacobi(
    table: &BracketTable,
    level_bound: u32,
    truncate: Option<u32>,
) -> Result<usize, Counterexample> {
    let sig = table.signature();
    let gens = generators_up_to(&sig, level_bound);
    let mut checked = 0;
    for &a in &gens {
        let ea = SuperPolyElement::generator(sig, a);
        for &b in &gens {
            let eb = SuperPolyElement::generator(sig, b);
            for &c in &gens {
                let ec = SuperPolyElement::generator(sig, c);
                let pa = a.parity(&sig);
                let pb = b.parity(&sig);
                let pc = c.parity(&sig);
                let t1 = poisson_bracket(
                    &ea,
                    &poisson_bracket(&eb, &ec, table, truncate),
                    table,
                    truncate,
                )
                .scale(&Scalar::one().negate_if(pa & pc == 1));
                let t2 = poisson_bracket(
                    &eb,
                    &poisson_bracket(&ec, &ea, table, truncate),
                    table,
                    truncate,
                )
                .scale(&Scalar::one().negate_if(pb & pa == 1));
                let t3 = poisson_bracket(
                    &ec,
                    &poisson_bracket(&ea, &eb, table, truncate),
                    table,
                    truncate,
                )
                .scale(&Scalar::one().negate_if(pc & pb == 1));
                let total = t1.add(&t2).add(&t3);
                if !total.is_zero() {
                    return Err(Counterexample {
                        location: format!("jacobi({a}, {b}, {c})"),
                        value: total.to_string(),
                    });
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// Poisson-ideal property of the truncation ideal: for every generator `g`
/// of level `<= p` and ideal generator `h` with `p < level(h) <= hi`, the
/// untruncated bracket `{g, h}` has every monomial containing a factor of
/// level `> p`. The checked window `hi` is `max(2p-1, p+1)` so the check is
/// not vacuous at `p = 1`.
pub fn verify_truncation_ideal(table: &BracketTable, p: u32) -> Result<usize, Counterexample> {
    let sig = table.signature();
    let hi = (2 * p - 1).max(p + 1);
    assert!(table.cap() >= hi, "table cap too small for ideal check");
    let low = generators_up_to(&sig, p);
    let mut checked = 0;
    for &g in &low {
        for h in generators_up_to(&sig, hi) {
            if h.level <= p {
                continue;
            }
            let br = table.bracket_generators(g, h);
            // in the ideal iff killing all levels > p kills the element
            if !br.truncate(p).is_zero() {
                return Err(Counterexample {
                    location: format!("{{{g}, {h}}}"),
                    value: br.to_string(),
                });
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// gl(d) structure data in the matrix-unit basis.
#[derive(Clone, Debug)]
pub struct AdjointData {
    pub dim: usize,
}

impl AdjointData {
    pub fn gl(dim: usize) -> Self {
        AdjointData { dim }
    }

    /// `[E_ab, E_cd] = delta_{bc} E_ad - delta_{da} E_cb` as a sparse list
    /// of ((row, col), coefficient).
    pub fn commutator_units(
        &self,
        (a, b): (usize, usize),
        (c, d): (usize, usize),
    ) -> Vec<((usize, usize), Scalar)> {
        let mut out: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        if b == c {
            *out.entry((a, d)).or_insert_with(Scalar::zero) += &Scalar::one();
        }
        if d == a {
            *out.entry((c, b)).or_insert_with(Scalar::zero) -= &Scalar::one();
        }
        out.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// Antisymmetry and the Jacobi identity of the structure constants.
    pub fn verify(&self) -> Result<(), Counterexample> {
        let units: Vec<(usize, usize)> = (1..=self.dim)
            .flat_map(|i| (1..=self.dim).map(move |j| (i, j)))
            .collect();
        let to_map = |v: Vec<((usize, usize), Scalar)>| -> BTreeMap<(usize, usize), Scalar> {
            v.into_iter().collect()
        };
        for &x in &units {
            for &y in &units {
                let xy = to_map(self.commutator_units(x, y));
                let yx = to_map(self.commutator_units(y, x));
                for (k, v) in &xy {
                    let neg = yx.get(k).cloned().unwrap_or_else(Scalar::zero);
                    if !(v + &neg).is_zero() {
                        return Err(Counterexample {
                            location: format!("antisymmetry at {x:?},{y:?}"),
                            value: format!("{v} vs {neg}"),
                        });
                    }
                }
            }
        }
        // Jacobi: [[x,y],z] + [[y,z],x] + [[z,x],y] = 0
        for &x in &units {
            for &y in &units {
                for &z in &units {
                    let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
                    {
                        let mut add_nested =
                            |first: Vec<((usize, usize), Scalar)>, other: (usize, usize)| {
                                for (u, c) in first {
                                    for (w, c2) in self.commutator_units(u, other) {
                                        *acc.entry(w).or_insert_with(Scalar::zero) += &(&c * &c2);
                                    }
                                }
                            };
                        add_nested(self.commutator_units(x, y), z);
                        add_nested(self.commutator_units(y, z), x);
                        add_nested(self.commutator_units(z, x), y);
                    }
                    if acc.values().any(|v| !v.is_zero()) {
                        return Err(Counterexample {
                            location: format!("jacobi at {x:?},{y:?},{z:?}"),
                            value: "nonzero".into(),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Adjoint presentation: the level-1 modes act on every level `n <= p` by
/// the gl structure constants, `{T_1^{ij}, T_n^{kl}} = delta^{kj} T_n^{il}
/// - delta^{il} T_n^{kj}` (the bracket image of `[E_ij, E_kl]` under
/// `T_n^{ij} <-> E_ij`).
pub fn verify_adjoint_presentation(table: &BracketTable, p: u32) -> Result<usize, Counterexample> {
    let sig = table.signature();
    assert!(
        sig.is_plain(),
        "adjoint presentation checked for plain signatures"
    );
    let d = sig.total();
    let adj = AdjointData::gl(d);
    let mut checked = 0;
    for n in 1..=p {
        for i in 1..=d {
            for j in 1..=d {
                for k in 1..=d {
                    for l in 1..=d {
                        let got = table.bracket_generators(
                            GeneratorIndex::new(1, i, j),
                            GeneratorIndex::new(n, k, l),
                        );
                        let mut expected = SuperPolyElement::zero(sig);
                        for ((r, c), coef) in adj.commutator_units((i, j), (k, l)) {
                            expected = expected.add(
                                &SuperPolyElement::generator(sig, GeneratorIndex::new(n, r, c))
                                    .scale(&coef),
                            );
                        }
                        if got != expected {
                            return Err(Counterexample {
                                location: format!("{{T1^{{{i},{j}}}, T{n}^{{{k},{l}}}}}"),
                                value: format!("got {got}, expected {expected}"),
                            });
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(checked)
}

/// Coefficients `c_1..c_{Np}` of `det L(u) = 1 + sum c_n u^{-n}` in the
/// truncated algebra (plain signature; entries commute, so the ordinary
/// determinant is well defined).
pub fn classical_det(sig: &Signature, p: u32) -> Vec<SuperPolyElement> {
    assert!(
        sig.is_plain(),
        "classical determinant needs a plain signature"
    );
    let d = sig.total();
    let entry = |i: usize, j: usize| -> BiPoly<SuperPolyElement> {
        let mut e = BiPoly::zero(sp_unit(*sig));
        if i == j {
            e = e.add(&BiPoly::constant(sp_unit(*sig), sp_unit(*sig)));
        }
        for n in 1..=p {
            e = e.add(&BiPoly::term(
                sp_unit(*sig),
                n,
                0,
                SuperPolyElement::generator(*sig, GeneratorIndex::new(n, i, j)),
            ));
        }
        e
    };
    let det = determinant(d, &entry);
    (1..=(d as u32 * p)).map(|n| det.coeff(n, 0)).collect()
}

/// Leibniz-expansion determinant of a small matrix of ring elements.
fn determinant<R: Ring>(d: usize, entry: &impl Fn(usize, usize) -> R) -> R {
    fn go<R: Ring>(
        d: usize,
        entry: &impl Fn(usize, usize) -> R,
        used: &mut Vec<usize>,
        acc: &mut Option<R>,
        sign_flips: usize,
    ) {
        let row = used.len() + 1;
        if row > d {
            let mut term: Option<R> = None;
            for (r, &c) in used.iter().enumerate() {
                let e = entry(r + 1, c);
                term = Some(match term {
                    None => e,
                    Some(t) => t.mul(&e),
                });
            }
            let mut term = term.expect("d >= 1");
            if sign_flips % 2 == 1 {
                term = term.neg();
            }
            *acc = Some(match acc.take() {
                None => term,
                Some(a) => a.add(&term),
            });
            return;
        }
        for c in 1..=d {
            if used.contains(&c) {
                continue;
            }
            let inv = used.iter().filter(|&&u| u > c).count();
            used.push(c);
            go(d, entry, used, acc, sign_flips + inv);
            used.pop();
        }
    }
    let mut acc = None;
    go(d, entry, &mut Vec::new(), &mut acc, 0);
    acc.expect("nonempty determinant")
}

/// Check that each determinant coefficient is Poisson-central in the
/// truncated algebra and that the coefficients are algebraically
/// independent (distinct leading monomials).
pub fn verify_center(
    alg: &TruncatedYangian,
    coeffs: &[SuperPolyElement],
) -> Result<usize, Counterexample> {
    let expected = alg.sig.total() as u32 * alg.p;
    if coeffs.len() != expected as usize {
        return Err(Counterexample {
            location: "center dimension".into(),
            value: format!("got {} coefficients, expected {expected}", coeffs.len()),
        });
    }
    let mut leading = std::collections::BTreeSet::new();
    for (idx, c) in coeffs.iter().enumerate() {
        let lead = c
            .leading_monomial()
            .cloned()
            .ok_or_else(|| Counterexample {
                location: format!("c_{}", idx + 1),
                value: "zero coefficient".into(),
            })?;
        if !leading.insert(lead.clone()) {
            return Err(Counterexample {
                location: format!("c_{}", idx + 1),
                value: format!("leading monomial {lead} repeats"),
            });
        }
    }
    let mut checked = 0;
    for (idx, c) in coeffs.iter().enumerate() {
        for g in alg.generators() {
            let br = alg.bracket(c, &SuperPolyElement::generator(alg.sig, g));
            if !br.is_zero() {
                return Err(Counterexample {
                    location: format!("{{c_{}, {g}}}", idx + 1),
                    value: br.to_string(),
                });
            }
            checked += 1;
        }
    }
    Ok(checked)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(level: u32, row: usize, col: usize) -> GeneratorIndex {
        GeneratorIndex::new(level, row, col)
    }

    #[test]
    fn level_one_bracket_closes_into_gl2() {
        let sig = Signature::plain(2);
        let table = BracketTable::derive(sig, 2).unwrap();
        // {T_1^{12}, T_1^{21}} = T_1^{11} - T_1^{22}
        let got = table.bracket_generators(gen(1, 1, 2), gen(1, 2, 1));
        let expected = SuperPolyElement::generator(sig, gen(1, 1, 1))
            .sub(&SuperPolyElement::generator(sig, gen(1, 2, 2)));
        assert_eq!(got, expected);
    }

    #[test]
    fn bracket_with_constant_vanishes() {
        let sig = Signature::plain(2);
        let alg = TruncatedYangian::new(sig, 1, None).unwrap();
        let x = SuperPolyElement::generator(sig, gen(1, 1, 2));
        let one = SuperPolyElement::one(sig);
        assert!(alg.bracket(&x, &one).is_zero());
    }

    #[test]
    fn bracket_level_bound_holds() {
        let sig = Signature::plain(2);
        let table = BracketTable::derive(sig, 3).unwrap();
        table.check_level_bound().unwrap();
        // {T_1, T_2} contains no level-3 generator
        let b = table.bracket_generators(gen(1, 1, 2), gen(2, 2, 1));
        assert!(b.max_level() <= 2);
    }

    #[test]
    fn antisymmetry_plain_and_graded() {
        for sig in [Signature::plain(2), Signature::graded(1, 1)] {
            let table = BracketTable::derive(sig, 2).unwrap();
            table.check_antisymmetry().unwrap();
        }
    }

    #[test]
    fn leibniz_rule_spot_check() {
        let sig = Signature::plain(2);
        let alg = TruncatedYangian::new(sig, 2, None).unwrap();
        let x = SuperPolyElement::generator(sig, gen(1, 1, 2));
        let y = SuperPolyElement::generator(sig, gen(1, 2, 1));
        let z = SuperPolyElement::generator(sig, gen(2, 1, 1));
        let lhs = alg.bracket_untruncated(&x, &y.mul(&z));
        let rhs = alg
            .bracket_untruncated(&x, &y)
            .mul(&z)
            .add(&y.mul(&alg.bracket_untruncated(&x, &z)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn jacobi_small_cases() {
        let sig = Signature::plain(2);
        let table = BracketTable::derive(sig, 3).unwrap();
        verify_jacobi(&table, 1, None).unwrap();
        verify_jacobi(&table, 1, Some(1)).unwrap();
    }

    #[test]
    fn perturbed_table_fails_jacobi() {
        let sig = Signature::plain(2);
        let mut table = BracketTable::derive(sig, 2).unwrap();
        table.perturb_entry(
            gen(1, 1, 2),
            gen(1, 2, 1),
            SuperPolyElement::generator(sig, gen(1, 1, 2)),
        );
        assert!(verify_jacobi(&table, 1, None).is_err());
    }

    #[test]
    fn truncation_ideal_at_p1() {
        let sig = Signature::plain(2);
        let table = BracketTable::derive(sig, 2).unwrap();
        verify_truncation_ideal(&table, 1).unwrap();
    }

    #[test]
    fn adjoint_data_verified() {
        AdjointData::gl(2).verify().unwrap();
        AdjointData::gl(3).verify().unwrap();
    }

    #[test]
    fn adjoint_presentation_n2() {
        let sig = Signature::plain(2);
        let table = BracketTable::derive(sig, 2).unwrap();
        verify_adjoint_presentation(&table, 2).unwrap();
    }

    #[test]
    fn det_n1_p1() {
        let sig = Signature::plain(1);
        let coeffs = classical_det(&sig, 1);
        assert_eq!(coeffs.len(), 1);
        assert_eq!(coeffs[0], SuperPolyElement::generator(sig, gen(1, 1, 1)));
        let alg = TruncatedYangian::new(sig, 1, None).unwrap();
        verify_center(&alg, &coeffs).unwrap();
    }

    #[test]
    fn det_n2_p1_center() {
        let sig = Signature::plain(2);
        let coeffs = classical_det(&sig, 1);
        assert_eq!(coeffs.len(), 2);
        // c_1 = trace of T_1, a gl(2) Casimir
        let trace = SuperPolyElement::generator(sig, gen(1, 1, 1))
            .add(&SuperPolyElement::generator(sig, gen(1, 2, 2)));
        assert_eq!(coeffs[0], trace);
        let alg = TruncatedYangian::new(sig, 1, None).unwrap();
        verify_center(&alg, &coeffs).unwrap();
    }
}
