//! Finite gyrogroups given by Cayley tables.
//!
//! Elements are always the indices `0..order`. Tables loaded with other
//! labels are re-indexed and keep the original labels for display.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permutation::Permutation;

pub type Element = usize;

/// Largest `n` accepted by [`GyroGroup::gn`]; the table has `4^n` entries.
pub const MAX_GN_PARAMETER: u32 = 12;

/// Association order used when iterating powers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PowerOrder {
    /// `a^(m+1) = a ⊕ a^m`
    #[default]
    Left,
    /// `a^(m+1) = a^m ⊕ a`
    Right,
}

/// A finite magma with a left identity, stored as a Cayley table.
///
/// Construction only checks that the table is square, in range, and has a
/// left identity row. Whether the remaining gyrogroup axioms hold is the job
/// of [`GyroGroup::verify_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GyroGroup {
    order: usize,
    table: Vec<Element>,
    identity: Element,
    left_inverses: Vec<Option<Element>>,
    labels: Vec<String>,
}

impl GyroGroup {
    /// The order-`2^n` gyrogroup `G(n)`.
    ///
    /// With `m = 2^(n-1)`, `P = 0..m` and `H = m..2m`:
    ///
    /// | i, j   | i ⊕ j                                  |
    /// |--------|----------------------------------------|
    /// | P × P  | `(i + j) mod m`                         |
    /// | P × H  | `(i + j) mod m + m`                     |
    /// | H × P  | `(i + (m/2 - 1) j) mod m + m`           |
    /// | H × H  | `((m/2 + 1) i + (m/2 - 1) j) mod m`     |
    pub fn gn(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::OrderParameterTooSmall(n));
        }
        if n > MAX_GN_PARAMETER {
            return Err(Error::BoundExceeded {
                what: "G(n) construction",
                order: 1usize << n,
                bound: 1usize << MAX_GN_PARAMETER,
            });
        }
        let order = 1usize << n;
        let m = order / 2;
        let half = m / 2;
        let mut table = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                let value = match (i < m, j < m) {
                    (true, true) => (i + j) % m,
                    (true, false) => (i + j) % m + m,
                    (false, true) => (i + (half - 1) * j) % m + m,
                    (false, false) => ((half + 1) * i + (half - 1) * j) % m,
                };
                table.push(value);
            }
        }
        Ok(Self::assemble(order, table, 0, default_labels(order)))
    }

    /// Loads a table given as rows of element indices.
    ///
    /// Without a hint the identity is the first row equal to `0..N`.
    pub fn from_rows(rows: &[Vec<i64>], identity_hint: Option<Element>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        let mut table = Vec::with_capacity(order * order);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::NotSquare {
                    row: r,
                    len: row.len(),
                    expected: order,
                });
            }
            for (c, &value) in row.iter().enumerate() {
                if value < 0 || value as usize >= order {
                    return Err(Error::EntryOutOfRange {
                        row: r,
                        col: c,
                        value,
                        order,
                    });
                }
                table.push(value as usize);
            }
        }
        Self::with_identity(order, table, identity_hint, default_labels(order))
    }

    /// Loads a table whose elements carry arbitrary labels.
    ///
    /// `labels[i]` names the element of row `i` and column `i`; every entry
    /// of `rows` must be one of those labels. Elements are re-indexed to
    /// `0..N` in label order.
    pub fn from_labeled(
        labels: Vec<String>,
        rows: &[Vec<String>],
        identity_hint: Option<&str>,
    ) -> Result<Self> {
        let order = labels.len();
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        let mut index = HashMap::with_capacity(order);
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.as_str(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        if rows.len() != order {
            return Err(Error::NotSquare {
                row: rows.len().min(order),
                len: rows.len(),
                expected: order,
            });
        }
        let mut table = Vec::with_capacity(order * order);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::NotSquare {
                    row: r,
                    len: row.len(),
                    expected: order,
                });
            }
            for entry in row {
                let &i = index
                    .get(entry.as_str())
                    .ok_or_else(|| Error::UnknownLabel(entry.clone()))?;
                table.push(i);
            }
        }
        let hint = match identity_hint {
            Some(label) => Some(
                *index
                    .get(label)
                    .ok_or_else(|| Error::UnknownLabel(label.to_string()))?,
            ),
            None => None,
        };
        Self::with_identity(order, table, hint, labels)
    }

    fn with_identity(
        order: usize,
        table: Vec<Element>,
        hint: Option<Element>,
        labels: Vec<String>,
    ) -> Result<Self> {
        let is_identity_row = |e: usize| (0..order).all(|a| table[e * order + a] == a);
        let identity = match hint {
            Some(e) if e >= order => return Err(Error::ElementOutOfRange { element: e, order }),
            Some(e) if !is_identity_row(e) => return Err(Error::NotLeftIdentity(e)),
            Some(e) => e,
            None => (0..order)
                .find(|&e| is_identity_row(e))
                .ok_or(Error::NoLeftIdentity)?,
        };
        Ok(Self::assemble(order, table, identity, labels))
    }

    fn assemble(order: usize, table: Vec<Element>, identity: Element, labels: Vec<String>) -> Self {
        let left_inverses = (0..order)
            .map(|a| (0..order).find(|&x| table[x * order + a] == identity))
            .collect();
        Self {
            order,
            table,
            identity,
            left_inverses,
            labels,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn op(&self, a: Element, b: Element) -> Element {
        self.table[a * self.order + b]
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.table.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    /// The smallest `x` with `x ⊕ a = e`, if any.
    pub fn left_inverse(&self, a: Element) -> Option<Element> {
        self.left_inverses[a]
    }

    fn check_element(&self, a: Element) -> Result<()> {
        if a < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: a,
                order: self.order,
            })
        }
    }

    /// `gyr[a, b]`, computed as `c ↦ ⊖(a ⊕ b) ⊕ (a ⊕ (b ⊕ c))`.
    ///
    /// The result is only guaranteed to be a bijection when the table is a
    /// gyrogroup; otherwise the raw map is rejected.
    pub fn gyration(&self, a: Element, b: Element) -> Result<Permutation> {
        self.check_element(a)?;
        self.check_element(b)?;
        let map = self.gyration_map(a, b)?;
        Permutation::new(map)
    }

    fn gyration_map(&self, a: Element, b: Element) -> Result<Vec<Element>> {
        let ab = self.op(a, b);
        let inv = self.left_inverse(ab).ok_or(Error::MissingLeftInverse(ab))?;
        Ok((0..self.order)
            .map(|c| self.op(inv, self.op(a, self.op(b, c))))
            .collect())
    }

    pub fn power(&self, a: Element, m: u64) -> Result<Element> {
        self.power_with(a, m, PowerOrder::Left)
    }

    pub fn power_with(&self, a: Element, m: u64, order: PowerOrder) -> Result<Element> {
        self.check_element(a)?;
        if m == 0 {
            return Err(Error::ZeroExponent);
        }
        let mut x = a;
        for _ in 1..m {
            x = match order {
                PowerOrder::Left => self.op(a, x),
                PowerOrder::Right => self.op(x, a),
            };
        }
        Ok(x)
    }

    /// `{a^m : m >= 1}` under left iteration.
    pub fn power_closure(&self, a: Element) -> BTreeSet<Element> {
        let mut seen = BTreeSet::new();
        let mut x = a;
        // x ↦ a ⊕ x is a function on a finite set, so the orbit cycles.
        while seen.insert(x) {
            x = self.op(a, x);
        }
        seen
    }

    /// First `(a, m)` with `m <= max_m` where left and right powers differ.
    pub fn power_order_disagreement(&self, max_m: u64) -> Option<(Element, u64)> {
        for a in 0..self.order {
            let (mut left, mut right) = (a, a);
            for m in 2..=max_m {
                left = self.op(a, left);
                right = self.op(right, a);
                if left != right {
                    return Some((a, m));
                }
            }
        }
        None
    }

    /// First `(a, i, j)` with `a^i ⊕ a^j ≠ a^(i+j)` for `1 <= i, j <= order`.
    pub fn left_power_associativity_failure(&self) -> Option<(Element, u64, u64)> {
        let n = self.order;
        for a in 0..n {
            let mut powers = Vec::with_capacity(2 * n + 1);
            powers.push(a); // index 0 holds a^1
            for _ in 1..2 * n {
                let last = *powers.last().unwrap();
                powers.push(self.op(a, last));
            }
            for i in 1..=n {
                for j in 1..=n {
                    if self.op(powers[i - 1], powers[j - 1]) != powers[i + j - 1] {
                        return Some((a, i as u64, j as u64));
                    }
                }
            }
        }
        None
    }

    /// Exhaustively checks the gyrogroup axioms over all element triples.
    pub fn verify_axioms(&self) -> AxiomReport {
        let n = self.order;
        let e = self.identity;
        let mut report = AxiomReport::default();
        let fail = |report: &mut AxiomReport, axiom: Axiom, witness: Vec<Element>| {
            if report.flag(axiom) {
                report.set_flag(axiom, false);
                report
                    .counterexamples
                    .push(Counterexample { axiom, witness });
            }
        };

        if let Some(a) = (0..n).find(|&a| self.op(e, a) != a) {
            fail(&mut report, Axiom::LeftIdentity, vec![e, a]);
        }
        if let Some(a) = (0..n).find(|&a| self.left_inverse(a).is_none()) {
            fail(&mut report, Axiom::LeftInverse, vec![a]);
        }

        let mut gyrations: Vec<Option<Vec<Element>>> = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                gyrations.push(self.gyration_map(a, b).ok());
            }
        }
        let gyr = |a: usize, b: usize| gyrations[a * n + b].as_deref();

        for a in 0..n {
            for b in 0..n {
                let Some(g) = gyr(a, b) else {
                    fail(&mut report, Axiom::Gyroassociativity, vec![a, b, 0]);
                    fail(&mut report, Axiom::GyrationAutomorphism, vec![a, b, 0]);
                    fail(&mut report, Axiom::LeftLoop, vec![a, b, 0]);
                    continue;
                };
                let ab = self.op(a, b);
                if let Some(c) = (0..n).find(|&c| self.op(a, self.op(b, c)) != self.op(ab, g[c])) {
                    fail(&mut report, Axiom::Gyroassociativity, vec![a, b, c]);
                }
                if report.gyr_is_automorphism_ok {
                    if !is_bijection(g) {
                        fail(&mut report, Axiom::GyrationAutomorphism, vec![a, b, 0]);
                    } else if let Some((x, y)) =
                        first_pair(n, |x, y| g[self.op(x, y)] != self.op(g[x], g[y]))
                    {
                        let _ = y;
                        fail(&mut report, Axiom::GyrationAutomorphism, vec![a, b, x]);
                    }
                }
                if gyr(ab, b) != Some(g) {
                    fail(&mut report, Axiom::LeftLoop, vec![a, b, ab]);
                }
                if g[self.op(b, a)] != ab {
                    fail(&mut report, Axiom::Gyrocommutativity, vec![a, b]);
                }
            }
        }

        'assoc: for a in 0..n {
            for b in 0..n {
                let ab = self.op(a, b);
                for c in 0..n {
                    if self.op(a, self.op(b, c)) != self.op(ab, c) {
                        fail(&mut report, Axiom::Associativity, vec![a, b, c]);
                        break 'assoc;
                    }
                }
            }
        }
        report
    }

    /// Groups `gyr[a, b]` into distinct permutations.
    ///
    /// Class 0 is always the identity; other classes are numbered in order of
    /// first appearance scanning `(a, b)` row-major.
    pub fn gyration_table(&self) -> Result<GyrationTable> {
        let n = self.order;
        let mut classes = vec![Permutation::identity(n)];
        let mut index = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                let g = self.gyration(a, b)?;
                let id = match classes.iter().position(|p| *p == g) {
                    Some(id) => id,
                    None => {
                        classes.push(g);
                        classes.len() - 1
                    }
                };
                index[a][b] = id;
            }
        }
        Ok(GyrationTable { classes, index })
    }

    pub fn is_gyrogroup(&self) -> bool {
        self.verify_axioms().is_gyrogroup()
    }
}

fn default_labels(order: usize) -> Vec<String> {
    (0..order).map(|i| i.to_string()).collect()
}

fn is_bijection(map: &[usize]) -> bool {
    let mut seen = vec![false; map.len()];
    map.iter()
        .all(|&x| x < map.len() && !std::mem::replace(&mut seen[x], true))
}

fn first_pair(n: usize, mut pred: impl FnMut(usize, usize) -> bool) -> Option<(usize, usize)> {
    (0..n).find_map(|x| (0..n).find(|&y| pred(x, y)).map(|y| (x, y)))
}

/// Distinct gyrations and which `(a, b)` produce each one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GyrationTable {
    pub classes: Vec<Permutation>,
    pub index: Vec<Vec<usize>>,
}

impl GyrationTable {
    /// Whether this table partitions pairs the same way as a symbolic
    /// pattern (one row per element, one symbol per column, identity
    /// symbol `'I'`). Symbols other than `I` are matched up to renaming.
    pub fn matches_symbol_pattern(&self, pattern: &[&str]) -> bool {
        if pattern.len() != self.index.len() {
            return false;
        }
        let mut forward: HashMap<char, usize> = HashMap::from([('I', 0)]);
        let mut backward: HashMap<usize, char> = HashMap::from([(0, 'I')]);
        for (row, symbols) in self.index.iter().zip(pattern) {
            let symbols: Vec<char> = symbols.chars().filter(|c| !c.is_whitespace()).collect();
            if symbols.len() != row.len() {
                return false;
            }
            for (&class, &sym) in row.iter().zip(&symbols) {
                let f = *forward.entry(sym).or_insert(class);
                let b = *backward.entry(class).or_insert(sym);
                if f != class || b != sym {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    LeftIdentity,
    LeftInverse,
    Gyroassociativity,
    LeftLoop,
    GyrationAutomorphism,
    Gyrocommutativity,
    Associativity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub axiom: Axiom,
    pub witness: Vec<Element>,
}

/// Outcome of [`GyroGroup::verify_axioms`]; every false flag comes with a
/// counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub left_identity_ok: bool,
    pub left_inverse_ok: bool,
    pub gyroassociativity_ok: bool,
    pub left_loop_ok: bool,
    pub gyr_is_automorphism_ok: bool,
    pub gyrocommutative: bool,
    pub is_group: bool,
    pub counterexamples: Vec<Counterexample>,
}

impl Default for AxiomReport {
    fn default() -> Self {
        Self {
            left_identity_ok: true,
            left_inverse_ok: true,
            gyroassociativity_ok: true,
            left_loop_ok: true,
            gyr_is_automorphism_ok: true,
            gyrocommutative: true,
            is_group: true,
            counterexamples: Vec::new(),
        }
    }
}

impl AxiomReport {
    /// All four gyrogroup axioms plus the automorphism requirement.
    pub fn is_gyrogroup(&self) -> bool {
        self.left_identity_ok
            && self.left_inverse_ok
            && self.gyroassociativity_ok
            && self.left_loop_ok
            && self.gyr_is_automorphism_ok
    }

    pub fn flag(&self, axiom: Axiom) -> bool {
        match axiom {
            Axiom::LeftIdentity => self.left_identity_ok,
            Axiom::LeftInverse => self.left_inverse_ok,
            Axiom::Gyroassociativity => self.gyroassociativity_ok,
            Axiom::LeftLoop => self.left_loop_ok,
            Axiom::GyrationAutomorphism => self.gyr_is_automorphism_ok,
            Axiom::Gyrocommutativity => self.gyrocommutative,
            Axiom::Associativity => self.is_group,
        }
    }

    fn set_flag(&mut self, axiom: Axiom, value: bool) {
        let slot = match axiom {
            Axiom::LeftIdentity => &mut self.left_identity_ok,
            Axiom::LeftInverse => &mut self.left_inverse_ok,
            Axiom::Gyroassociativity => &mut self.gyroassociativity_ok,
            Axiom::LeftLoop => &mut self.left_loop_ok,
            Axiom::GyrationAutomorphism => &mut self.gyr_is_automorphism_ok,
            Axiom::Gyrocommutativity => &mut self.gyrocommutative,
            Axiom::Associativity => &mut self.is_group,
        };
        *slot = value;
    }

    pub fn counterexample(&self, axiom: Axiom) -> Option<&Counterexample> {
        self.counterexamples.iter().find(|c| c.axiom == axiom)
    }
}
