use crate::error::Result;
use crate::modulus::Modulus;

/// Anything that maps nonnegative integers into `Z_N`.
///
/// Level maps accept any `n` (the Ackermann map is defined for all `n >= 0`);
/// plain self-maps reduce their input modulo `N` first.
pub trait Evaluator {
    fn modulus(&self) -> Modulus;
    fn eval(&self, n: u64) -> Result<u64>;
    /// Short label used in reports, e.g. `level:3` or `tetration`.
    fn descriptor(&self) -> String;
}

impl<T: Evaluator + ?Sized> Evaluator for &T {
    fn modulus(&self) -> Modulus {
        (**self).modulus()
    }
    fn eval(&self, n: u64) -> Result<u64> {
        (**self).eval(n)
    }
    fn descriptor(&self) -> String {
        (**self).descriptor()
    }
}

impl<T: Evaluator + ?Sized> Evaluator for Box<T> {
    fn modulus(&self) -> Modulus {
        (**self).modulus()
    }
    fn eval(&self, n: u64) -> Result<u64> {
        (**self).eval(n)
    }
    fn descriptor(&self) -> String {
        (**self).descriptor()
    }
}

/// Adapts a closure into an [`Evaluator`]. Outputs are reduced modulo `N`.
pub struct FnMap<F> {
    modulus: Modulus,
    label: String,
    f: F,
}

impl<F: Fn(u64) -> u64> FnMap<F> {
    pub fn new(modulus: Modulus, label: impl Into<String>, f: F) -> Self {
        Self { modulus, label: label.into(), f }
    }
}

impl<F: Fn(u64) -> u64> Evaluator for FnMap<F> {
    fn modulus(&self) -> Modulus {
        self.modulus
    }
    fn eval(&self, n: u64) -> Result<u64> {
        Ok(self.modulus.reduce((self.f)(n)))
    }
    fn descriptor(&self) -> String {
        self.label.clone()
    }
}
