//! Period-k sequences with exact values, Dirichlet characters and Gauss sums.

mod characters;
mod spec;

use num_complex::Complex64;

use crate::arith::{self, modp};
use crate::error::{Error, Result};
use crate::exact::{rat, Cyclotomic};

pub use characters::{dirichlet_characters, gauss_sum, DirichletCharacter};
pub use spec::make_sequence;

/// Metadata carried along with a sequence; never consulted for arithmetic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tags {
    /// `(modulus, index)` when the sequence is a Dirichlet character.
    pub character: Option<(u32, usize)>,
    pub parity: Option<i8>,
    pub primitive: Option<bool>,
    pub label: Option<String>,
}

/// A sequence f(n) with f(n + k) = f(n), stored as f(0), …, f(k−1).
#[derive(Clone, Debug)]
pub struct PeriodicSequence {
    values: Vec<Cyclotomic>,
    pub tags: Tags,
}

impl PartialEq for PeriodicSequence {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
    }
}

impl PeriodicSequence {
    pub fn new(values: Vec<Cyclotomic>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Domain("a periodic sequence needs period k ≥ 1".into()));
        }
        Ok(PeriodicSequence { values, tags: Tags::default() })
    }

    pub fn from_fn(k: u32, f: impl Fn(i64) -> Cyclotomic) -> Result<Self> {
        Self::new((0..k as i64).map(f).collect())
    }

    pub fn constant(k: u32, c: Cyclotomic) -> Result<Self> {
        Self::from_fn(k, |_| c.clone())
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.tags.label = Some(label.into());
        self
    }

    pub fn period(&self) -> u32 {
        self.values.len() as u32
    }

    /// f(n) for any integer n.
    pub fn at(&self, n: i64) -> &Cyclotomic {
        &self.values[modp(n, self.values.len() as i64) as usize]
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn embed(&self) -> Vec<Complex64> {
        self.values.iter().map(Cyclotomic::embed).collect()
    }

    /// A_α = {f(αn)}; any integer α, including ones sharing factors with k.
    pub fn scale_index(&self, alpha: i64) -> Self {
        let mut out = Self::from_fn(self.period(), |n| self.at(alpha * n).clone()).expect("period ≥ 1");
        if modp(alpha, self.period() as i64) == 1 {
            out.tags = self.tags.clone();
        }
        out
    }

    /// Pointwise complex conjugate.
    pub fn conj(&self) -> Self {
        let mut out = Self::new(self.values.iter().map(Cyclotomic::conj).collect()).expect("nonempty");
        out.tags.parity = self.tags.parity;
        out
    }

    pub fn map(&self, f: impl Fn(&Cyclotomic) -> Cyclotomic) -> Self {
        Self::new(self.values.iter().map(f).collect()).expect("nonempty")
    }

    /// The same sequence viewed with period `h`, a multiple of the current period.
    pub fn with_period(&self, h: u32) -> Result<Self> {
        if h == 0 || !h.is_multiple_of(self.period()) {
            return Err(Error::Domain(format!("period {h} is not a multiple of {}", self.period())));
        }
        let mut out = Self::from_fn(h, |n| self.at(n).clone())?;
        out.tags = self.tags.clone();
        Ok(out)
    }

    /// Pointwise product; the period is the lcm of both periods.
    pub fn pointwise(&self, other: &Self) -> Result<Self> {
        let h = arith::lcm(self.period() as i64, other.period() as i64) as u32;
        Self::from_fn(h, |n| self.at(n) * other.at(n))
    }

    /// Finite Fourier coefficients f̂(n) = (1/k) Σ_j f(j) e(−nj/k).
    pub fn fourier_hat(&self) -> Result<Self> {
        let k = self.period() as i64;
        let roots = (0..k).map(|j| Cyclotomic::root_of_unity(k as u32, -j)).collect::<Result<Vec<_>>>()?;
        let inv_k = rat(1, k);
        let vals = (0..k)
            .map(|n| {
                let s: Cyclotomic = (0..k).map(|j| self.at(j) * &roots[modp(n * j, k) as usize]).sum();
                s.scale(&inv_k)
            })
            .collect();
        Self::new(vals)
    }

    /// Inverse relation: f(n) = Σ_j f̂(j) e(nj/k), applied to `self` as the hat sequence.
    pub fn fourier_inverse(&self) -> Result<Self> {
        let k = self.period() as i64;
        let roots = (0..k).map(|j| Cyclotomic::root_of_unity(k as u32, j)).collect::<Result<Vec<_>>>()?;
        Self::new(
            (0..k)
                .map(|n| (0..k).map(|j| self.at(j) * &roots[modp(n * j, k) as usize]).sum())
                .collect(),
        )
    }

    /// B₀-style mean (1/k) Σ f(n).
    pub fn mean(&self) -> Cyclotomic {
        let s: Cyclotomic = self.values.iter().sum();
        s.scale(&rat(1, self.period() as i64))
    }
}

/// A_α = {f(αn)}.
pub fn scale_index(seq: &PeriodicSequence, alpha: i64) -> PeriodicSequence {
    seq.scale_index(alpha)
}

/// f̂ per the finite Fourier transform.
pub fn fourier_hat(seq: &PeriodicSequence) -> Result<PeriodicSequence> {
    seq.fourier_hat()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_literal;

    fn lit(s: &str) -> Cyclotomic {
        parse_literal(s).unwrap()
    }

    #[test]
    fn hat_of_constant_and_character() {
        let c = make_sequence("const:k=3").unwrap();
        let h = c.fourier_hat().unwrap();
        assert_eq!(h.values(), &[lit("1"), lit("0"), lit("0")]);
        let chi = make_sequence("char:k=4,i=1").unwrap();
        let h = chi.fourier_hat().unwrap();
        assert_eq!(h.values(), &[lit("0"), lit("-1/2*z4^1"), lit("0"), lit("1/2*z4^1")]);
    }

    #[test]
    fn double_hat_reflects() {
        let f = make_sequence("list:k=5;vals=1,z5^2,-3/7,0,2+z4").unwrap();
        let hh = f.fourier_hat().unwrap().fourier_hat().unwrap();
        for n in 0..5 {
            assert_eq!(*hh.at(n), f.at(-n).scale(&rat(1, 5)));
        }
        assert_eq!(f.fourier_hat().unwrap().fourier_inverse().unwrap(), f);
    }

    #[test]
    fn scaling() {
        let chi = make_sequence("char:k=4,i=1").unwrap();
        assert_eq!(chi.scale_index(1), chi);
        assert_eq!(chi.scale_index(-1).values(), &[lit("0"), lit("-1"), lit("0"), lit("1")]);
        assert_eq!(chi.scale_index(2).values(), vec![lit("0"); 4].as_slice());
    }
}
