//! Named small matroids used as fixtures.

use crate::matroid::Matroid;
use crate::repr::Representation;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    /// File-name friendly key, e.g. `u_2_3` or `fano`.
    pub slug: String,
    pub matroid: Matroid,
    pub representation: Option<Representation>,
}

/// Vandermonde columns `(1, t, ..., t^(r-1))` for `t = 0..n`, over the rationals.
fn vandermonde(r: usize, n: usize) -> Representation {
    let rows = (0..r).map(|i| (0..n).map(|t| (t as i64).pow(i as u32)).collect()).collect();
    Representation::over_rationals_int(n, rows).expect("well-formed matrix")
}

/// Columns are the nonzero vectors of GF(2)^3 with column `j` the binary digits of `j+1`,
/// least significant first, so `{0,1,2}` is a line.
fn binary_rows() -> Vec<Vec<i64>> {
    (0..3).map(|bit| (1..=7).map(|v| (v >> bit) & 1).collect()).collect()
}

fn uniform(r: usize, n: usize) -> CatalogEntry {
    CatalogEntry {
        name: format!("U_{{{r},{n}}}"),
        slug: format!("u_{r}_{n}"),
        matroid: Matroid::uniform(r, n).expect("uniform matroid"),
        representation: Some(vandermonde(r, n)),
    }
}

fn from_rep(name: &str, slug: &str, rep: Representation) -> CatalogEntry {
    let matroid = Matroid::from_representation(rep.clone()).expect("catalog matrix").with_name(name);
    CatalogEntry { name: name.into(), slug: slug.into(), matroid, representation: Some(rep) }
}

/// The fixture set: uniform matroids up to rank 3, `M(K4)`, Fano, and non-Fano.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut entries: Vec<CatalogEntry> = [(1, 1), (1, 2), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (3, 6)]
        .into_iter()
        .map(|(r, n)| uniform(r, n))
        .collect();

    // signed vertex-edge incidence of K4, edges 01 02 03 12 13 23
    let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let k4 = (0..4)
        .map(|v| {
            edges
                .iter()
                .map(|&(a, b)| {
                    if v == a {
                        1
                    } else if v == b {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    entries.push(from_rep("M(K4)", "m_k4", Representation::over_rationals_int(6, k4).unwrap()));
    entries.push(from_rep("Fano", "fano", Representation::over_prime(2, 7, binary_rows()).unwrap()));
    entries.push(from_rep("non-Fano", "non_fano", Representation::over_rationals_int(7, binary_rows()).unwrap()));
    entries
}

/// Finds a catalog entry by display name or slug, ignoring case.
pub fn lookup(key: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name.eq_ignore_ascii_case(key) || e.slug.eq_ignore_ascii_case(key))
}
