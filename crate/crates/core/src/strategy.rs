//! Interchangeable methods for `D(n, k)` and `p(n)`, registered by name.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::sync::Mutex;

use crate::analytic::{default_digits, hrr_p};
use crate::error::{Error, Result};
use crate::exact::{rational, BigInt, BigRational};
use crate::multisum::{durfee_count_multisum, partition_count_multisum};
use crate::partition::{durfee_count_enumerated, durfee_series, partition_count_euler};
use crate::quasipoly::{interpolate, printed_durfee, PrintedForm, Quasipolynomial};

/// Default largest `n` the multisum methods accept.
pub const MULTISUM_CEILING: u64 = 150;
/// Largest `n` the enumeration oracle accepts.
pub const ENUMERATION_CEILING: u64 = 80;
/// Largest `k` for which the quasipolynomial method fits a period.
pub const QUASI_MAX_K: u64 = 6;

const MULTISUM_GROWTH: &str =
    "the number of terms grows like exp(2π√(n/15)), so large n takes effectively forever";

pub trait Strategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn describe(&self) -> &'static str;
}

/// A way to obtain `D(n, k)`. Counting methods return integers; the printed
/// closed forms may return a non-integer rational.
pub trait DurfeeCounter: Strategy {
    fn durfee(&self, n: u64, k: u64) -> Result<BigRational>;
}

/// A way to obtain `p(n)` exactly.
pub trait PartitionCounter: Strategy {
    fn count(&self, n: u64) -> Result<BigInt>;
}

/// Name-keyed collection of strategies, in registration order.
pub struct Registry<T: ?Sized + Strategy> {
    entries: Vec<Box<T>>,
}

impl<T: ?Sized + Strategy> Default for Registry<T> {
    fn default() -> Self {
        Self { entries: Vec::new() }
    }
}

impl<T: ?Sized + Strategy> Registry<T> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a strategy, replacing any earlier one with the same name.
    pub fn register(&mut self, strategy: Box<T>) {
        match self.entries.iter().position(|s| s.name() == strategy.name()) {
            Some(i) => self.entries[i] = strategy,
            None => self.entries.push(strategy),
        }
    }

    pub fn get(&self, name: &str) -> Result<&T> {
        self.entries
            .iter()
            .find(|s| s.name() == name)
            .map(|b| b.as_ref())
            .ok_or_else(|| Error::UnknownMethod(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|s| s.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.entries.iter().map(|b| b.as_ref())
    }
}

fn empty_durfee(n: u64) -> BigRational {
    rational(&BigInt::from(u8::from(n == 0)))
}

pub struct MultisumDurfee {
    pub ceiling: u64,
}

impl Strategy for MultisumDurfee {
    fn name(&self) -> &'static str {
        "multisum"
    }
    fn describe(&self) -> &'static str {
        "nested sum over the multiplicities of parts right of the Durfee square"
    }
}

impl DurfeeCounter for MultisumDurfee {
    fn durfee(&self, n: u64, k: u64) -> Result<BigRational> {
        if n > self.ceiling {
            return Err(Error::RefusedScale {
                method: self.name(),
                n,
                ceiling: self.ceiling,
                reason: MULTISUM_GROWTH.into(),
            });
        }
        Ok(rational(&durfee_count_multisum(n, k, None)))
    }
}

pub struct EnumerationDurfee;

impl Strategy for EnumerationDurfee {
    fn name(&self) -> &'static str {
        "oracle"
    }
    fn describe(&self) -> &'static str {
        "enumerate every partition of n and read off its Durfee square"
    }
}

impl DurfeeCounter for EnumerationDurfee {
    fn durfee(&self, n: u64, k: u64) -> Result<BigRational> {
        if n > ENUMERATION_CEILING {
            return Err(Error::RefusedScale {
                method: self.name(),
                n,
                ceiling: ENUMERATION_CEILING,
                reason: "enumeration visits all p(n) partitions".into(),
            });
        }
        Ok(rational(&durfee_count_enumerated(n, k)))
    }
}

pub struct GenfunDurfee;

impl Strategy for GenfunDurfee {
    fn name(&self) -> &'static str {
        "genfun"
    }
    fn describe(&self) -> &'static str {
        "coefficient of q^n in q^{k²} / Π_{j<=k} (1 - q^j)²"
    }
}

impl DurfeeCounter for GenfunDurfee {
    fn durfee(&self, n: u64, k: u64) -> Result<BigRational> {
        Ok(rational(&durfee_series(k, n)[n as usize]))
    }
}

/// Evaluates fitted quasipolynomials, fitting each `k` once.
#[derive(Default)]
pub struct QuasiDurfee {
    fitted: Mutex<HashMap<u64, Quasipolynomial>>,
}

impl Strategy for QuasiDurfee {
    fn name(&self) -> &'static str {
        "quasi"
    }
    fn describe(&self) -> &'static str {
        "interpolated quasipolynomial of period lcm(1..k)"
    }
}

impl DurfeeCounter for QuasiDurfee {
    fn durfee(&self, n: u64, k: u64) -> Result<BigRational> {
        if k == 0 {
            return Ok(empty_durfee(n));
        }
        if k > QUASI_MAX_K {
            return Err(Error::Unsupported(format!(
                "quasi method fits k <= {QUASI_MAX_K}, got k = {k}"
            )));
        }
        let mut fitted = self.fitted.lock().unwrap_or_else(|e| e.into_inner());
        let q = match fitted.entry(k) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(interpolate(k)?),
        };
        if n < q.n_min() {
            return Err(Error::Domain(format!(
                "n = {n} is below the validity threshold {} for k = {k}",
                q.n_min()
            )));
        }
        Ok(q.value(n))
    }
}

pub struct PrintedDurfee {
    pub form: PrintedForm,
}

impl Strategy for PrintedDurfee {
    fn name(&self) -> &'static str {
        "printed"
    }
    fn describe(&self) -> &'static str {
        "published closed forms for k <= 4"
    }
}

impl DurfeeCounter for PrintedDurfee {
    fn durfee(&self, n: u64, k: u64) -> Result<BigRational> {
        printed_durfee(n, k, self.form)
    }
}

pub struct MultisumPartition {
    pub ceiling: u64,
}

impl Strategy for MultisumPartition {
    fn name(&self) -> &'static str {
        "multisum"
    }
    fn describe(&self) -> &'static str {
        "sum of the Durfee multisums over k <= √n"
    }
}

impl PartitionCounter for MultisumPartition {
    fn count(&self, n: u64) -> Result<BigInt> {
        if n > self.ceiling {
            return Err(Error::RefusedScale {
                method: self.name(),
                n,
                ceiling: self.ceiling,
                reason: MULTISUM_GROWTH.into(),
            });
        }
        Ok(partition_count_multisum(n, None))
    }
}

pub struct EulerPartition;

impl Strategy for EulerPartition {
    fn name(&self) -> &'static str {
        "euler"
    }
    fn describe(&self) -> &'static str {
        "pentagonal-number recurrence"
    }
}

impl PartitionCounter for EulerPartition {
    fn count(&self, n: u64) -> Result<BigInt> {
        Ok(partition_count_euler(n))
    }
}

/// Rounded Rademacher series; `digits = None` uses the default precision
/// for each `n`.
pub struct HrrPartition {
    pub digits: Option<u32>,
}

impl Strategy for HrrPartition {
    fn name(&self) -> &'static str {
        "hrr"
    }
    fn describe(&self) -> &'static str {
        "Rademacher series rounded to the nearest integer"
    }
}

impl PartitionCounter for HrrPartition {
    fn count(&self, n: u64) -> Result<BigInt> {
        if n == 0 {
            return Ok(BigInt::from(1));
        }
        hrr_p(n, None, self.digits.unwrap_or_else(|| default_digits(n)))
    }
}

/// All `D(n, k)` methods: multisum, oracle, genfun, quasi, printed.
pub fn durfee_registry(multisum_ceiling: u64, form: PrintedForm) -> Registry<dyn DurfeeCounter> {
    let mut r: Registry<dyn DurfeeCounter> = Registry::new();
    r.register(Box::new(MultisumDurfee { ceiling: multisum_ceiling }));
    r.register(Box::new(EnumerationDurfee));
    r.register(Box::new(GenfunDurfee));
    r.register(Box::new(QuasiDurfee::default()));
    r.register(Box::new(PrintedDurfee { form }));
    r
}

/// All `p(n)` methods: multisum, euler, hrr.
pub fn partition_registry(multisum_ceiling: u64, digits: Option<u32>) -> Registry<dyn PartitionCounter> {
    let mut r: Registry<dyn PartitionCounter> = Registry::new();
    r.register(Box::new(MultisumPartition { ceiling: multisum_ceiling }));
    r.register(Box::new(EulerPartition));
    r.register(Box::new(HrrPartition { digits }));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn registry_lookup() {
        let r = durfee_registry(MULTISUM_CEILING, PrintedForm::Corrected);
        assert_eq!(r.names(), ["multisum", "oracle", "genfun", "quasi", "printed"]);
        assert!(matches!(r.get("nope"), Err(Error::UnknownMethod(_))));
        for m in r.iter() {
            assert_eq!(m.durfee(9, 2).unwrap(), ratio(20, 1), "{}", m.name());
            assert_eq!(m.durfee(3, 2).unwrap(), ratio(0, 1), "{}", m.name());
        }
    }

    #[test]
    fn register_replaces_same_name() {
        let mut r = partition_registry(MULTISUM_CEILING, None);
        r.register(Box::new(MultisumPartition { ceiling: 10 }));
        assert_eq!(r.names(), ["multisum", "euler", "hrr"]);
        assert!(matches!(r.get("multisum").unwrap().count(11), Err(Error::RefusedScale { .. })));
    }

    #[test]
    fn partition_methods_agree() {
        let r = partition_registry(MULTISUM_CEILING, None);
        for n in [1u64, 5, 50] {
            let values: Vec<_> = r.iter().map(|m| m.count(n).unwrap()).collect();
            assert!(values.windows(2).all(|w| w[0] == w[1]), "n = {n}");
        }
    }

    #[test]
    fn limits_are_reported() {
        let r = durfee_registry(MULTISUM_CEILING, PrintedForm::Corrected);
        assert!(matches!(r.get("multisum").unwrap().durfee(151, 3), Err(Error::RefusedScale { .. })));
        assert!(matches!(r.get("quasi").unwrap().durfee(100, 7), Err(Error::Unsupported(_))));
        assert!(matches!(r.get("printed").unwrap().durfee(100, 5), Err(Error::Unsupported(_))));
        let verbatim = PrintedDurfee { form: PrintedForm::Verbatim };
        assert_eq!(verbatim.durfee(16, 4).unwrap(), ratio(79, 81));
    }
}
