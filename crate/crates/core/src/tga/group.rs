//! Finite groups presented by Cayley tables.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A finite group given by its multiplication table.
///
/// `table[i][j]` is the index of `g_i * g_j`. Construction validates the
/// Latin-square property, associativity, identity, and inverses, so a
/// value of this type is always a genuine group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupTable {
    name: String,
    elements: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    subgroups: BTreeMap<String, Vec<usize>>,
}

/// Check the group axioms on a raw table. Returns a description of the
/// first violation instead of panicking.
pub fn validate_group(table: &[Vec<usize>]) -> std::result::Result<(), String> {
    let n = table.len();
    if n == 0 {
        return Err("empty table".into());
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(format!("row {i} has length {} != {n}", row.len()));
        }
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(format!("entry ({i},{j}) = {v} out of range"));
            }
        }
    }
    // Latin square: every row and column is a permutation.
    for i in 0..n {
        let mut seen_row = vec![false; n];
        let mut seen_col = vec![false; n];
        for j in 0..n {
            if seen_row[table[i][j]] {
                return Err(format!("row {i} repeats element {}", table[i][j]));
            }
            seen_row[table[i][j]] = true;
            if seen_col[table[j][i]] {
                return Err(format!("column {i} repeats element {}", table[j][i]));
            }
            seen_col[table[j][i]] = true;
        }
    }
    let identity = find_identity(table).ok_or("no identity element")?;
    let _ = identity;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    return Err(format!("associativity fails at triple ({i},{j},{k})"));
                }
            }
        }
    }
    // Inverses follow from the Latin-square property plus identity, but
    // report explicitly if missing.
    let e = find_identity(table).unwrap();
    for i in 0..n {
        if !(0..n).any(|j| table[i][j] == e && table[j][i] == e) {
            return Err(format!("element {i} has no inverse"));
        }
    }
    Ok(())
}

fn find_identity(table: &[Vec<usize>]) -> Option<usize> {
    let n = table.len();
    (0..n).find(|&e| (0..n).all(|j| table[e][j] == j && table[j][e] == j))
}

impl FiniteGroupTable {
    pub fn new(
        name: impl Into<String>,
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
        subgroups: BTreeMap<String, Vec<usize>>,
    ) -> Result<Self> {
        validate_group(&table).map_err(Error::Validation)?;
        let n = table.len();
        if elements.len() != n {
            return Err(Error::Validation(format!(
                "{} element names for a table of order {n}",
                elements.len()
            )));
        }
        {
            let mut sorted = elements.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != n {
                return Err(Error::Validation("duplicate element names".into()));
            }
        }
        let identity = find_identity(&table).expect("validated above");
        let inverses = (0..n)
            .map(|i| (0..n).find(|&j| table[i][j] == identity).expect("latin square"))
            .collect();
        let group = FiniteGroupTable {
            name: name.into(),
            elements,
            table,
            identity,
            inverses,
            subgroups: BTreeMap::new(),
        };
        let mut with_subs = group;
        for (sub_name, indices) in subgroups {
            if !with_subs.is_subgroup(&indices) {
                return Err(Error::Validation(format!(
                    "named subset {sub_name:?} is not a subgroup"
                )));
            }
            let mut sorted = indices;
            sorted.sort_unstable();
            with_subs.subgroups.insert(sub_name, sorted);
        }
        Ok(with_subs)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn element_name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn element_names(&self) -> &[String] {
        &self.elements
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverses[i]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn subgroups(&self) -> &BTreeMap<String, Vec<usize>> {
        &self.subgroups
    }

    pub fn subgroup(&self, name: &str) -> Option<&[usize]> {
        self.subgroups.get(name).map(|v| v.as_slice())
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (i..n).all(|j| self.table[i][j] == self.table[j][i]))
    }

    pub fn is_abelian_on(&self, subset: &[usize]) -> bool {
        subset
            .iter()
            .all(|&i| subset.iter().all(|&j| self.table[i][j] == self.table[j][i]))
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut acc = i;
        let mut k = 1;
        while acc != self.identity {
            acc = self.mul(acc, i);
            k += 1;
        }
        k
    }

    /// Exponent of the group: lcm of the element orders.
    pub fn exponent(&self) -> u32 {
        (0..self.order())
            .map(|i| self.element_order(i) as u32)
            .fold(1u32, num_integer::lcm)
    }

    pub fn exponent_on(&self, subset: &[usize]) -> u32 {
        subset
            .iter()
            .map(|&i| self.element_order(i) as u32)
            .fold(1u32, num_integer::lcm)
    }

    pub fn is_subgroup(&self, indices: &[usize]) -> bool {
        if indices.is_empty() || indices.iter().any(|&i| i >= self.order()) {
            return false;
        }
        let mut set = vec![false; self.order()];
        for &i in indices {
            set[i] = true;
        }
        if !set[self.identity] {
            return false;
        }
        indices.iter().all(|&i| {
            set[self.inv(i)] && indices.iter().all(|&j| set[self.mul(i, j)])
        })
    }

    /// Left cosets gH within the subgroup `domain` (which must contain
    /// `sub`), each sorted ascending; the coset of the identity first,
    /// remaining cosets ordered by their minimal element.
    pub fn left_cosets(&self, domain: &[usize], sub: &[usize]) -> Result<Vec<Vec<usize>>> {
        let in_domain: Vec<bool> = {
            let mut v = vec![false; self.order()];
            for &d in domain {
                v[d] = true;
            }
            v
        };
        if sub.iter().any(|&h| !in_domain[h]) {
            return Err(Error::Structure("subgroup not contained in domain".into()));
        }
        let mut seen = vec![false; self.order()];
        let mut cosets = Vec::new();
        let mut ordered: Vec<usize> = domain.to_vec();
        ordered.sort_unstable();
        // Identity coset first.
        for &g in std::iter::once(&self.identity).chain(ordered.iter()) {
            if seen[g] {
                continue;
            }
            let mut coset: Vec<usize> = sub.iter().map(|&h| self.mul(g, h)).collect();
            coset.sort_unstable();
            for &c in &coset {
                if !in_domain[c] {
                    return Err(Error::Structure(
                        "coset leaves the stated domain subgroup".into(),
                    ));
                }
                seen[c] = true;
            }
            cosets.push(coset);
        }
        Ok(cosets)
    }

    /// Build the standalone group table of a subgroup, together with the
    /// map from new indices to ambient indices.
    pub fn subgroup_table(&self, indices: &[usize], name: &str) -> Result<(FiniteGroupTable, Vec<usize>)> {
        if !self.is_subgroup(indices) {
            return Err(Error::Precondition("subset is not a subgroup".into()));
        }
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        let pos = |g: usize| sorted.iter().position(|&x| x == g).unwrap();
        let table = sorted
            .iter()
            .map(|&i| sorted.iter().map(|&j| pos(self.mul(i, j))).collect())
            .collect();
        let elements = sorted.iter().map(|&i| self.elements[i].clone()).collect();
        let sub = FiniteGroupTable::new(name, elements, table, BTreeMap::new())?;
        Ok((sub, sorted))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
    }

    #[test]
    fn c2_is_valid() {
        assert!(validate_group(&[vec![0, 1], vec![1, 0]]).is_ok());
    }

    #[test]
    fn broken_identity_reported() {
        // table[0][0] = 1 breaks the identity axiom (and the Latin square).
        let err = validate_group(&[vec![1, 1], vec![1, 0]]).unwrap_err();
        assert!(!err.is_empty());
    }

    #[test]
    fn non_associative_reported() {
        // A Latin square with identity that is not a group (order 5,
        // subtraction table is non-associative).
        let table: Vec<Vec<usize>> =
            (0..5).map(|i| (0..5).map(|j| (i + 5 - j) % 5).collect()).collect();
        let err = validate_group(&table).unwrap_err();
        assert!(err.contains("associativity") || err.contains("identity") || err.contains("no identity"));
    }

    #[test]
    fn cyclic_group_properties() {
        let g = FiniteGroupTable::new(
            "C6",
            (0..6).map(|i| i.to_string()).collect(),
            cyclic_table(6),
            BTreeMap::new(),
        )
        .unwrap();
        assert!(g.is_abelian());
        assert_eq!(g.exponent(), 6);
        assert_eq!(g.element_order(1), 6);
        assert_eq!(g.element_order(2), 3);
        assert_eq!(g.inv(1), 5);
    }

    #[test]
    fn subgroup_and_cosets() {
        let g = FiniteGroupTable::new(
            "C6",
            (0..6).map(|i| i.to_string()).collect(),
            cyclic_table(6),
            BTreeMap::new(),
        )
        .unwrap();
        assert!(g.is_subgroup(&[0, 2, 4]));
        assert!(!g.is_subgroup(&[0, 1]));
        let all: Vec<usize> = (0..6).collect();
        let cosets = g.left_cosets(&all, &[0, 3]).unwrap();
        assert_eq!(cosets, vec![vec![0, 3], vec![1, 4], vec![2, 5]]);
    }
}
