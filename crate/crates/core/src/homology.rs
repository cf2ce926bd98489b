//! Simplicial and Morse chain complexes, Smith normal form and integer
//! homology.

use std::fmt;

use crate::complex::SimplicialComplex;
use crate::enumerate::enumerate_flowlines_index1;
use crate::error::{Error, Result};
use crate::field::critical_simplices;
use crate::hasse::{arrow_sign, ModifiedHasseDiagram};
use crate::path::path_sign;
use crate::simplex::Simplex;

/// Ordered generators of a chain group in one dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainBasis {
    pub dim: usize,
    pub simplices: Vec<Simplex>,
}

impl ChainBasis {
    /// Sorts and dedups the generators.
    pub fn new(dim: usize, mut simplices: Vec<Simplex>) -> Self {
        simplices.sort();
        simplices.dedup();
        ChainBasis { dim, simplices }
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn position(&self, s: &Simplex) -> Option<usize> {
        self.simplices.binary_search(s).ok()
    }
}

/// The matrix of a map `C_p → C_{p-1}`, one column per generator of `C_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentialMatrix {
    pub p: usize,
    pub rows: ChainBasis,
    pub cols: ChainBasis,
    pub entries: Vec<Vec<i64>>,
}

impl DifferentialMatrix {
    pub fn zeros(p: usize, rows: ChainBasis, cols: ChainBasis) -> Self {
        let entries = vec![vec![0; cols.len()]; rows.len()];
        DifferentialMatrix { p, rows, cols, entries }
    }

    pub fn entry(&self, row: &Simplex, col: &Simplex) -> Option<i64> {
        Some(self.entries[self.rows.position(row)?][self.cols.position(col)?])
    }

    /// Text dump: `p`, the row basis, the column basis, then one line per row.
    pub fn dump(&self) -> String {
        let names = |b: &ChainBasis| b.simplices.iter().map(Simplex::to_string).collect::<Vec<_>>().join(" ");
        let mut out = format!("p {}\nrows {}\ncols {}\n", self.p, names(&self.rows), names(&self.cols));
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(i64::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// `∂_p` of the full simplicial chain complex.
pub fn simplicial_boundary(k: &SimplicialComplex, p: usize) -> Result<DifferentialMatrix> {
    if p == 0 {
        return Err(Error::DimensionMismatch("the boundary is defined for p >= 1".into()));
    }
    let rows = ChainBasis::new(p - 1, k.simplices(p - 1).to_vec());
    let cols = ChainBasis::new(p, k.simplices(p).to_vec());
    let mut m = DifferentialMatrix::zeros(p, rows, cols);
    for (j, s) in m.cols.simplices.iter().enumerate() {
        for f in s.facets() {
            let i = m.rows.position(&f).ok_or_else(|| Error::NotInComplex(f.clone()))?;
            m.entries[i][j] = arrow_sign(s, &f)? as i64;
        }
    }
    Ok(m)
}

/// The Morse differential `C_p → C_{p-1}` on critical simplices, each
/// entry the signed count of index-1 flowlines.
pub fn morse_differential(h: &ModifiedHasseDiagram, p: usize, max_len: Option<usize>) -> Result<DifferentialMatrix> {
    if p == 0 {
        return Err(Error::DimensionMismatch(
            "the differential is defined for p >= 1".into(),
        ));
    }
    let rows = ChainBasis::new(p - 1, critical_simplices(h.complex(), h.field(), p - 1));
    let cols = ChainBasis::new(p, critical_simplices(h.complex(), h.field(), p));
    let mut m = DifferentialMatrix::zeros(p, rows, cols);
    for j in 0..m.cols.len() {
        for i in 0..m.rows.len() {
            let paths = enumerate_flowlines_index1(h, &m.cols.simplices[j], &m.rows.simplices[i], max_len)?;
            m.entries[i][j] = paths.iter().map(|q| path_sign(q) as i64).sum();
        }
    }
    Ok(m)
}

/// Checks `d_low · d_high = 0`, naming the first nonzero entry otherwise.
pub fn verify_d_squared(d_high: &DifferentialMatrix, d_low: &DifferentialMatrix) -> Result<()> {
    if d_low.cols != d_high.rows {
        return Err(Error::DimensionMismatch(format!(
            "the columns of d_{} do not match the rows of d_{}",
            d_low.p, d_high.p
        )));
    }
    for (i, row) in d_low.entries.iter().enumerate() {
        for j in 0..d_high.cols.len() {
            let value: i64 = row.iter().zip(&d_high.entries).map(|(a, r)| a * r[j]).sum();
            if value != 0 {
                return Err(Error::DSquaredNonzero {
                    row: d_low.rows.simplices[i].clone(),
                    col: d_high.cols.simplices[j].clone(),
                    value,
                });
            }
        }
    }
    Ok(())
}

/// Rank and invariant factors of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub rank: usize,
    /// Positive diagonal entries, each dividing the next.
    pub factors: Vec<i64>,
}

/// Smith normal form by unimodular row and column operations, pivoting on
/// the entry of least absolute value.
pub fn smith_normal_form(entries: &[Vec<i64>]) -> SmithForm {
    let mut a: Vec<Vec<i128>> = entries.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut factors = Vec::new();
    for t in 0..m.min(n) {
        loop {
            let pivot = (t..m)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs());
            let Some((pi, pj)) = pivot else {
                return finish(factors);
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..m {
                let q = a[i][t] / a[t][t];
                if q != 0 {
                    for j in t..n {
                        a[i][j] -= q * a[t][j];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..n {
                let q = a[t][j] / a[t][t];
                if q != 0 {
                    for i in t..m {
                        a[i][j] -= q * a[i][t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            let d = a[t][t];
            let stray = (t + 1..m).find(|&i| (t + 1..n).any(|j| a[i][j] % d != 0));
            match stray {
                Some(i) => {
                    for j in t..n {
                        a[t][j] += a[i][j];
                    }
                }
                None => {
                    factors.push(d.abs());
                    break;
                }
            }
        }
    }
    finish(factors)
}

fn finish(factors: Vec<i128>) -> SmithForm {
    let factors: Vec<i64> = factors
        .into_iter()
        .map(|d| i64::try_from(d).expect("invariant factor fits in i64"))
        .collect();
    SmithForm {
        rank: factors.len(),
        factors,
    }
}

/// Generator counts and differentials `∂_1 … ∂_top` of a chain complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    pub bases: Vec<ChainBasis>,
    /// `differentials[p - 1]` is `∂_p`.
    pub differentials: Vec<DifferentialMatrix>,
}

impl ChainComplex {
    pub fn differential(&self, p: usize) -> Option<&DifferentialMatrix> {
        p.checked_sub(1).and_then(|i| self.differentials.get(i))
    }
}

pub fn simplicial_chain_complex(k: &SimplicialComplex) -> Result<ChainComplex> {
    let top = k.top_dimension().unwrap_or(0);
    let bases = (0..=top).map(|p| ChainBasis::new(p, k.simplices(p).to_vec())).collect();
    let differentials = (1..=top).map(|p| simplicial_boundary(k, p)).collect::<Result<_>>()?;
    Ok(ChainComplex { bases, differentials })
}

pub fn morse_chain_complex(h: &ModifiedHasseDiagram, max_len: Option<usize>) -> Result<ChainComplex> {
    let top = h.complex().top_dimension().unwrap_or(0);
    let bases = (0..=top)
        .map(|p| ChainBasis::new(p, critical_simplices(h.complex(), h.field(), p)))
        .collect();
    let differentials = (1..=top)
        .map(|p| morse_differential(h, p, max_len))
        .collect::<Result<_>>()?;
    Ok(ChainComplex { bases, differentials })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<i64>,
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        match self.betti {
            0 => {}
            1 => terms.push("Z".to_string()),
            b => terms.push(format!("Z^{b}")),
        }
        terms.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    /// `groups[i]` is `H_i`.
    pub groups: Vec<HomologyGroup>,
}

impl HomologyResult {
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.betti).collect()
    }
}

impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.groups.iter().enumerate() {
            writeln!(f, "H_{i} = {g}")?;
        }
        Ok(())
    }
}

/// Integer homology, refusing when some `∂_{p} ∂_{p+1}` is nonzero.
pub fn homology(c: &ChainComplex) -> Result<HomologyResult> {
    for pair in c.differentials.windows(2) {
        verify_d_squared(&pair[1], &pair[0])?;
    }
    let snf: Vec<SmithForm> = c.differentials.iter().map(|d| smith_normal_form(&d.entries)).collect();
    let rank = |p: usize| p.checked_sub(1).and_then(|i| snf.get(i)).map_or(0, |s| s.rank);
    let groups = c
        .bases
        .iter()
        .enumerate()
        .map(|(i, b)| HomologyGroup {
            betti: b.len() - rank(i) - rank(i + 1),
            torsion: snf
                .get(i)
                .map(|s| s.factors.iter().copied().filter(|&d| d > 1).collect())
                .unwrap_or_default(),
        })
        .collect();
    Ok(HomologyResult { groups })
}

/// Homology of the full simplicial chain complex of `k`.
pub fn simplicial_homology_oracle(k: &SimplicialComplex) -> Result<HomologyResult> {
    homology(&simplicial_chain_complex(k)?)
}
