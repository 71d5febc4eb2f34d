//! Root systems built from Coxeter–Dynkin diagrams.
//!
//! Everything here is exact. The normalization puts long roots at squared
//! length 2, short roots at 1 (B, C, F) or 2/3 (G), and takes the quadratic
//! form in the ω-basis as `S = M⁻¹ D` with `D = diag(⟨α_i,α_i⟩/2)`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{q, Rational, Weight};

/// Cartan–Killing series letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// Input describing a root system: a series and rank, or an explicit Cartan
/// matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagramSpec {
    Series { series: Series, rank: usize },
    Cartan(Vec<Vec<i64>>),
}

impl FromStr for DiagramSpec {
    type Err = Error;

    /// Parses the `<letter><rank>` grammar, e.g. `A2`, `C3`, `G2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidDiagram(format!("expected <letter><rank>, got `{s}`"));
        let mut chars = s.trim().chars();
        let letter = chars.next().ok_or_else(bad)?;
        let series = match letter.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        Ok(DiagramSpec::Series { series, rank })
    }
}

/// Coordinate systems accepted by [`RootSystem::basis_convert`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Fundamental weights ω_i.
    Omega,
    /// Simple roots α_i.
    Alpha,
    /// Simple coroots α_i∨.
    Coroot,
    /// The standard orthogonal chart of the classical series.
    Orthogonal,
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "omega" => Ok(Basis::Omega),
            "alpha" => Ok(Basis::Alpha),
            "coroot" | "coroot-alpha" => Ok(Basis::Coroot),
            "orthogonal" => Ok(Basis::Orthogonal),
            _ => Err(Error::InvalidArgument(format!("unknown basis `{s}`"))),
        }
    }
}

/// Element cap used when a Weyl group order has to be found by enumeration.
const ORDER_ENUMERATION_CAP: usize = 5_000_000;

/// Static data of a root system. Immutable after construction.
#[derive(Debug)]
pub struct RootSystem {
    rank: usize,
    series: Option<Series>,
    cartan: Vec<Vec<i64>>,
    cartan_inverse: Vec<Vec<Rational>>,
    root_norms: Vec<Rational>,
    quadratic_form: Vec<Vec<Rational>>,
    positive_roots: Vec<Vec<i64>>,
    marks: Vec<i64>,
    comarks: Vec<i64>,
    components: Vec<Vec<usize>>,
    order: OnceLock<Result<u128>>,
}

impl Clone for RootSystem {
    fn clone(&self) -> Self {
        RootSystem {
            rank: self.rank,
            series: self.series,
            cartan: self.cartan.clone(),
            cartan_inverse: self.cartan_inverse.clone(),
            root_norms: self.root_norms.clone(),
            quadratic_form: self.quadratic_form.clone(),
            positive_roots: self.positive_roots.clone(),
            marks: self.marks.clone(),
            comarks: self.comarks.clone(),
            components: self.components.clone(),
            order: OnceLock::new(),
        }
    }
}

impl RootSystem {
    /// Builds a root system, enforcing the admissible series/rank table
    /// (A n≥1, B n≥3, C n≥2, D n≥4, E 6–8, F 4, G 2).
    pub fn build(diagram: &DiagramSpec) -> Result<Self> {
        match diagram {
            DiagramSpec::Series { series, rank } => {
                let n = *rank;
                let ok = match series {
                    Series::A => n >= 1,
                    Series::B => n >= 3,
                    Series::C => n >= 2,
                    Series::D => n >= 4,
                    Series::E => (6..=8).contains(&n),
                    Series::F => n == 4,
                    Series::G => n == 2,
                };
                if !ok {
                    return Err(Error::InvalidDiagram(format!("{series}{n} is not an admissible diagram")));
                }
                Self::from_cartan(series_cartan(*series, n), Some(*series))
            }
            DiagramSpec::Cartan(m) => {
                validate_cartan(m)?;
                Self::from_cartan(m.clone(), None)
            }
        }
    }

    /// Parses `<letter><rank>` and builds.
    pub fn from_name(name: &str) -> Result<Self> {
        Self::build(&name.parse()?)
    }

    /// Builds a classical system at ranks below the admissible table, as
    /// needed for branching targets: B2 (long α1, short α2), D3, and the
    /// usual ranks. Accepts A n≥1, B n≥2, C n≥2, D n≥3.
    pub fn classical(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            _ => false,
        };
        if !ok {
            return Err(Error::InvalidDiagram(format!("{series}{rank} is not a classical system")));
        }
        Self::from_cartan(series_cartan(series, rank), Some(series))
    }

    fn from_cartan(cartan: Vec<Vec<i64>>, series: Option<Series>) -> Result<Self> {
        let n = cartan.len();
        let components = connected_components(&cartan);
        let root_norms = symmetrize(&cartan, &components)?;
        let mq: Vec<Vec<Rational>> = cartan.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect();
        let cartan_inverse = invert(&mq).ok_or_else(|| Error::InvalidDiagram("singular Cartan matrix".into()))?;
        // Gram matrix of the simple roots must be positive definite.
        let gram: Vec<Vec<Rational>> =
            (0..n).map(|j| (0..n).map(|k| q(cartan[j][k]) * &root_norms[k] / q(2)).collect()).collect();
        if !leading_minors_positive(&gram) {
            return Err(Error::InvalidDiagram("Cartan matrix is not of finite type".into()));
        }
        let quadratic_form: Vec<Vec<Rational>> =
            (0..n).map(|i| (0..n).map(|j| &cartan_inverse[i][j] * &root_norms[j] / q(2)).collect()).collect();
        let positive_roots = positive_roots_by_closure(&cartan);
        let mut marks = vec![0i64; n];
        for comp in &components {
            let top = positive_roots
                .iter()
                .filter(|r| r.iter().enumerate().all(|(i, &c)| c == 0 || comp.contains(&i)))
                .max_by_key(|r| r.iter().sum::<i64>())
                .expect("each component has roots");
            for &i in comp {
                marks[i] = top[i];
            }
        }
        let mut comarks = vec![0i64; n];
        for i in 0..n {
            let c = q(marks[i]) * &root_norms[i] / q(2);
            if !c.is_integer() {
                return Err(Error::InvalidDiagram("non-integral comark".into()));
            }
            comarks[i] = c.to_integer().try_into().expect("small comark");
        }
        Ok(RootSystem {
            rank: n,
            series,
            cartan,
            cartan_inverse,
            root_norms,
            quadratic_form,
            positive_roots,
            marks,
            comarks,
            components,
            order: OnceLock::new(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
    pub fn series(&self) -> Option<Series> {
        self.series
    }
    /// Name such as `B3`, or `cartan` for explicit matrices.
    pub fn name(&self) -> String {
        match self.series {
            Some(s) => format!("{s}{}", self.rank),
            None => "cartan".to_string(),
        }
    }
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }
    pub fn cartan_inverse(&self) -> &[Vec<Rational>] {
        &self.cartan_inverse
    }
    /// Squared lengths ⟨α_i, α_i⟩ of the simple roots.
    pub fn root_norms(&self) -> &[Rational] {
        &self.root_norms
    }
    /// The matrix S with ⟨x, y⟩ = x S yᵀ in ω-coordinates.
    pub fn quadratic_form(&self) -> &[Vec<Rational>] {
        &self.quadratic_form
    }
    /// Positive roots in α-coordinates, ordered by height and then
    /// lexicographically descending, so the first `rank` entries are the
    /// simple roots in order.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }
    /// Coefficients m_i of the highest root in the α-basis.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }
    /// Coefficients q_i of the highest root in the α∨-basis.
    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }
    /// Index sets of the connected components of the diagram.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }
    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    pub(crate) fn require_irreducible(&self) -> Result<()> {
        if self.is_irreducible() {
            Ok(())
        } else {
            Err(Error::InvalidDiagram("operation needs a connected diagram".into()))
        }
    }

    /// Checks the length of a coordinate vector.
    pub fn check_rank(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, got: v.len() });
        }
        Ok(())
    }

    /// Exact scalar product x S yᵀ of two ω-coordinate vectors.
    pub fn scalar_product(&self, x: &[Rational], y: &[Rational]) -> Result<Rational> {
        self.check_rank(x)?;
        self.check_rank(y)?;
        Ok(self.scalar_product_unchecked(x, y))
    }

    pub(crate) fn scalar_product_unchecked(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for i in 0..self.rank {
            if x[i].is_zero() {
                continue;
            }
            let mut row = Rational::zero();
            for j in 0..self.rank {
                if !y[j].is_zero() {
                    row += &self.quadratic_form[i][j] * &y[j];
                }
            }
            acc += &x[i] * row;
        }
        acc
    }

    /// x S as a vector, so that ⟨x, y⟩ = Σ_k (x S)_k y_k.
    pub fn covector(&self, x: &[Rational]) -> Weight {
        (0..self.rank)
            .map(|k| {
                let mut acc = Rational::zero();
                for i in 0..self.rank {
                    if !x[i].is_zero() {
                        acc += &x[i] * &self.quadratic_form[i][k];
                    }
                }
                acc
            })
            .collect()
    }

    /// A root given in α-coordinates, expressed in ω-coordinates.
    pub fn root_to_omega(&self, alpha: &[i64]) -> Weight {
        (0..self.rank).map(|k| q((0..self.rank).map(|j| alpha[j] * self.cartan[j][k]).sum())).collect()
    }

    /// Simple coroot α_i∨ (0-based `i`) in ω-coordinates.
    pub fn coroot_omega(&self, i: usize) -> Weight {
        let s = q(2) / &self.root_norms[i];
        self.cartan[i].iter().map(|&v| q(v) * &s).collect()
    }

    /// Squared length of a root given in α-coordinates.
    pub fn root_norm(&self, alpha: &[i64]) -> Rational {
        let w = self.root_to_omega(alpha);
        self.scalar_product_unchecked(&w, &w)
    }

    /// The highest root ξ in ω-coordinates (connected diagrams).
    pub fn highest_root_omega(&self) -> Weight {
        self.root_to_omega(&self.marks)
    }

    /// The factor κ with (Euclidean dot of orthogonal images) = κ ⟨x, y⟩.
    /// The C_n chart has long roots of squared length 4, so κ = 2 there.
    pub fn orthogonal_scale(&self) -> Result<Rational> {
        match self.series {
            Some(Series::A | Series::B | Series::D) => Ok(q(1)),
            Some(Series::C) => Ok(q(2)),
            _ => Err(Error::UnsupportedBasis("orthogonal".into())),
        }
    }

    /// Dimension of the orthogonal chart (n+1 for A_n, n otherwise).
    pub fn orthogonal_dim(&self) -> Result<usize> {
        match self.series {
            Some(Series::A) => Ok(self.rank + 1),
            Some(Series::B | Series::C | Series::D) => Ok(self.rank),
            _ => Err(Error::UnsupportedBasis("orthogonal".into())),
        }
    }

    /// Exact change of coordinates between the supported bases.
    pub fn basis_convert(&self, v: &[Rational], from: Basis, to: Basis) -> Result<Weight> {
        let expected = if from == Basis::Orthogonal { self.orthogonal_dim()? } else { self.rank };
        if v.len() != expected {
            return Err(Error::RankMismatch { expected, got: v.len() });
        }
        if to == Basis::Orthogonal {
            self.orthogonal_dim()?;
        }
        if from == to {
            if from == Basis::Orthogonal && self.series == Some(Series::A) {
                return Ok(center(v));
            }
            return Ok(v.to_vec());
        }
        let omega = match from {
            Basis::Omega => v.to_vec(),
            Basis::Alpha => {
                (0..self.rank).map(|k| (0..self.rank).map(|j| &v[j] * q(self.cartan[j][k])).sum()).collect()
            }
            Basis::Coroot => (0..self.rank)
                .map(|k| (0..self.rank).map(|j| &v[j] * q(2 * self.cartan[j][k]) / &self.root_norms[j]).sum())
                .collect(),
            Basis::Orthogonal => self.orthogonal_to_omega(v)?,
        };
        match to {
            Basis::Omega => Ok(omega),
            // x_ω = a M  ⇒  a = x_ω M⁻¹.
            Basis::Alpha => Ok((0..self.rank)
                .map(|k| (0..self.rank).map(|j| &omega[j] * &self.cartan_inverse[j][k]).sum())
                .collect()),
            Basis::Coroot => {
                let a: Weight = (0..self.rank)
                    .map(|k| (0..self.rank).map(|j| &omega[j] * &self.cartan_inverse[j][k]).sum())
                    .collect();
                Ok(a.iter().zip(&self.root_norms).map(|(x, n)| x * n / q(2)).collect())
            }
            Basis::Orthogonal => self.omega_to_orthogonal(&omega),
        }
    }

    fn omega_to_orthogonal(&self, l: &[Rational]) -> Result<Weight> {
        let n = self.rank;
        let half = || Rational::new(1.into(), 2.into());
        match self.series {
            Some(Series::A) => {
                // x_j = Σ_{i≥j} λ_i, then shift to sum zero.
                let mut x: Weight = (0..=n).map(|j| l[j.min(n)..].iter().sum()).collect();
                x[n] = Rational::zero();
                Ok(center(&x))
            }
            Some(Series::B) => Ok((0..n).map(|j| l[j..n - 1].iter().sum::<Rational>() + &l[n - 1] * half()).collect()),
            Some(Series::C) => Ok((0..n).map(|j| l[j..].iter().sum()).collect()),
            Some(Series::D) => {
                let tail = (&l[n - 2] + &l[n - 1]) * half();
                let mut x: Weight =
                    (0..n - 1).map(|j| l[j.min(n - 2)..n - 2].iter().sum::<Rational>() + &tail).collect();
                x.push((&l[n - 2] - &l[n - 1]) * half());
                Ok(x)
            }
            _ => Err(Error::UnsupportedBasis("orthogonal".into())),
        }
    }

    fn orthogonal_to_omega(&self, x: &[Rational]) -> Result<Weight> {
        let n = self.rank;
        let diff = |i: usize| &x[i] - &x[i + 1];
        match self.series {
            Some(Series::A) => Ok((0..n).map(diff).collect()),
            Some(Series::B) => {
                let mut l: Weight = (0..n - 1).map(diff).collect();
                l.push(&x[n - 1] * q(2));
                Ok(l)
            }
            Some(Series::C) => {
                let mut l: Weight = (0..n - 1).map(diff).collect();
                l.push(x[n - 1].clone());
                Ok(l)
            }
            Some(Series::D) => {
                let mut l: Weight = (0..n - 2).map(diff).collect();
                l.push(&x[n - 2] + &x[n - 1]);
                l.push(&x[n - 2] - &x[n - 1]);
                Ok(l)
            }
            _ => Err(Error::UnsupportedBasis("orthogonal".into())),
        }
    }

    /// |W|, from the closed forms for the named series and by enumerating the
    /// orbit of ρ = (1, …, 1) otherwise.
    pub fn weyl_order(&self) -> Result<u128> {
        self.order.get_or_init(|| self.compute_order()).clone()
    }

    /// |W_e| = |W| / 2.
    pub fn even_weyl_order(&self) -> Result<u128> {
        Ok(self.weyl_order()? / 2)
    }

    fn compute_order(&self) -> Result<u128> {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.series {
            Some(Series::A) => Ok(fact(n + 1)),
            Some(Series::B | Series::C) => Ok((1u128 << n) * fact(n)),
            Some(Series::D) => Ok((1u128 << (n - 1)) * fact(n)),
            Some(Series::E) => Ok(match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            }),
            Some(Series::F) => Ok(1152),
            Some(Series::G) => Ok(12),
            None => {
                let start = vec![1i64; self.rank];
                let mut seen: HashSet<Vec<i64>> = HashSet::from([start.clone()]);
                let mut queue = VecDeque::from([start]);
                while let Some(x) = queue.pop_front() {
                    for i in 0..self.rank {
                        let y: Vec<i64> = (0..self.rank).map(|k| x[k] - x[i] * self.cartan[i][k]).collect();
                        if seen.insert(y.clone()) {
                            if seen.len() > ORDER_ENUMERATION_CAP {
                                return Err(Error::GroupTooLarge { cap: ORDER_ENUMERATION_CAP });
                            }
                            queue.push_back(y);
                        }
                    }
                }
                Ok(seen.len() as u128)
            }
        }
    }
}

/// Shifts an A_n orthogonal vector to coordinate sum zero.
fn center(x: &[Rational]) -> Weight {
    let mean: Rational = x.iter().sum::<Rational>() / q(x.len() as i64);
    x.iter().map(|v| v - &mean).collect()
}

/// Cartan matrix M_jk = 2⟨α_j,α_k⟩/⟨α_k,α_k⟩ in Bourbaki numbering.
pub fn series_cartan(series: Series, n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |a: usize, b: usize, ab: i64, ba: i64| {
        m[a][b] = ab;
        m[b][a] = ba;
    };
    match series {
        Series::A => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1, -1, -1);
            }
        }
        Series::B => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 2, n - 1, -2, -1);
        }
        Series::C => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 2, n - 1, -1, -2);
        }
        Series::D => {
            for i in 0..n - 3 {
                link(i, i + 1, -1, -1);
            }
            link(n - 3, n - 2, -1, -1);
            link(n - 3, n - 1, -1, -1);
        }
        Series::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            for i in 2..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        Series::F => {
            link(0, 1, -1, -1);
            link(1, 2, -2, -1);
            link(2, 3, -1, -1);
        }
        Series::G => link(0, 1, -3, -1),
    }
    m
}

fn validate_cartan(m: &[Vec<i64>]) -> Result<()> {
    let n = m.len();
    if n == 0 {
        return Err(Error::InvalidDiagram("empty Cartan matrix".into()));
    }
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidDiagram("Cartan matrix is not square".into()));
        }
        if row[i] != 2 {
            return Err(Error::InvalidDiagram(format!("diagonal entry {} is not 2", i + 1)));
        }
        for j in 0..n {
            if i != j && (row[j] > 0 || (row[j] == 0) != (m[j][i] == 0)) {
                return Err(Error::InvalidDiagram(format!("bad off-diagonal entry ({}, {})", i + 1, j + 1)));
            }
        }
    }
    Ok(())
}

fn connected_components(m: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = m.len();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut k = 0;
        while k < comp.len() {
            let a = comp[k];
            for b in 0..n {
                if !seen[b] && m[a][b] != 0 {
                    seen[b] = true;
                    comp.push(b);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Solves M_jk n_k = M_kj n_j for the squared root lengths, scaling each
/// component so its longest root has squared length 2.
fn symmetrize(m: &[Vec<i64>], comps: &[Vec<usize>]) -> Result<Vec<Rational>> {
    let n = m.len();
    let mut norms: Vec<Option<Rational>> = vec![None; n];
    for comp in comps {
        norms[comp[0]] = Some(q(1));
        let mut stack = vec![comp[0]];
        while let Some(j) = stack.pop() {
            let nj = norms[j].clone().expect("assigned");
            for k in 0..n {
                if k == j || m[j][k] == 0 {
                    continue;
                }
                let nk = q(m[k][j]) * &nj / q(m[j][k]);
                match &norms[k] {
                    Some(old) if *old != nk => {
                        return Err(Error::InvalidDiagram("Cartan matrix is not symmetrizable".into()))
                    }
                    Some(_) => {}
                    None => {
                        norms[k] = Some(nk);
                        stack.push(k);
                    }
                }
            }
        }
        let max = comp.iter().map(|&i| norms[i].clone().expect("assigned")).max().expect("nonempty");
        for &i in comp {
            norms[i] = Some(norms[i].take().expect("assigned") * q(2) / &max);
        }
    }
    Ok(norms.into_iter().map(|x| x.expect("assigned")).collect())
}

/// Exact Gauss–Jordan inverse.
pub(crate) fn invert(a: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].recip();
        for v in m[c].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                let pivot = m[c].clone();
                for (v, pv) in m[r].iter_mut().zip(pivot) {
                    *v -= &f * pv;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn leading_minors_positive(a: &[Vec<Rational>]) -> bool {
    // Gaussian elimination without pivoting: all pivots positive ⟺ all
    // leading principal minors positive.
    let n = a.len();
    let mut m = a.to_vec();
    for c in 0..n {
        if !m[c][c].is_positive() {
            return false;
        }
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &m[c][c];
            let pivot = m[c].clone();
            for (v, pv) in m[r].iter_mut().zip(pivot) {
                *v -= &f * pv;
            }
        }
    }
    true
}

fn positive_roots_by_closure(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    let simple: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let mut seen: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut queue: VecDeque<Vec<i64>> = simple.into_iter().collect();
    while let Some(b) = queue.pop_front() {
        for i in 0..n {
            // ⟨β, α_i∨⟩ = Σ_j β_j M_ji
            let c: i64 = (0..n).map(|j| b[j] * m[j][i]).sum();
            if c == 0 {
                continue;
            }
            let mut r = b.clone();
            r[i] -= c;
            if r.iter().all(|&v| v >= 0) && r.iter().any(|&v| v > 0) && seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    roots
}
