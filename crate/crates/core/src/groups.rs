//! Element-level models of the four group families.
//!
//! Elements use small canonical encodings derived from each presentation:
//!
//! * cyclic `Z_n`: a residue `0..n`;
//! * abelian p-group `Z_{p^a1} x ... x Z_{p^ar}`: a tuple of residues;
//! * dihedral `D_n = <a, b | a^n = b^2 = e, ab = ba^-1>`: `a^i b^f`, `i < n`;
//! * dicyclic `Q_n = <a, b | a^2n = e, a^n = b^2, ab = ba^-1>`: `a^i b^f`, `i < 2n`.
//!
//! Products are reduced with `b a^i = a^-i b` and, for `Q_n`, `b^2 = a^n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{self, checked_pow};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Cyclic,
    AbelianP,
    Dihedral,
    Dicyclic,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Cyclic, Family::AbelianP, Family::Dihedral, Family::Dicyclic];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::AbelianP => "abelianp",
            Family::Dihedral => "dihedral",
            Family::Dicyclic => "dicyclic",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s.trim())
            .ok_or_else(|| Error::InvalidSpec(format!("unknown family `{s}`")))
    }
}

/// One group from the supported families.
///
/// Construct through [`GroupSpec::cyclic`] and friends or by parsing; both
/// validate parameters. Exponents of an abelian p-group are kept ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupSpec {
    Cyclic { n: u64 },
    AbelianP { p: u64, exponents: Vec<u32> },
    Dihedral { n: u64 },
    Dicyclic { n: u64 },
}

/// A group element in its canonical encoding.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Cyclic(u64),
    AbelianP(Vec<u64>),
    /// `a^i b^flip`.
    Dihedral { i: u64, flip: bool },
    /// `a^i b^flip`.
    Dicyclic { i: u64, flip: bool },
}

impl GroupSpec {
    pub fn cyclic(n: u64) -> Result<Self> {
        let spec = GroupSpec::Cyclic { n };
        spec.validate()?;
        Ok(spec)
    }

    pub fn abelian_p(p: u64, mut exponents: Vec<u32>) -> Result<Self> {
        exponents.sort_unstable();
        let spec = GroupSpec::AbelianP { p, exponents };
        spec.validate()?;
        Ok(spec)
    }

    pub fn dihedral(n: u64) -> Result<Self> {
        let spec = GroupSpec::Dihedral { n };
        spec.validate()?;
        Ok(spec)
    }

    pub fn dicyclic(n: u64) -> Result<Self> {
        let spec = GroupSpec::Dicyclic { n };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        match self {
            GroupSpec::Cyclic { n } if *n < 1 => bad("cyclic order must be at least 1".into()),
            GroupSpec::Dihedral { n } if *n < 3 => bad(format!("dihedral parameter {n} must be at least 3")),
            GroupSpec::Dicyclic { n } if *n < 2 => bad(format!("dicyclic parameter {n} must be at least 2")),
            GroupSpec::AbelianP { p, exponents } => {
                if !arith::is_prime(*p) {
                    return bad(format!("{p} is not prime"));
                }
                if exponents.is_empty() {
                    return bad("abelian p-group needs at least one exponent".into());
                }
                if exponents.contains(&0) {
                    return bad("exponents must be positive".into());
                }
                if exponents.windows(2).any(|w| w[0] > w[1]) {
                    return bad("exponents must be ascending".into());
                }
                self.order().map(|_| ())
            }
            _ => self.order().map(|_| ()),
        }
    }

    pub fn family(&self) -> Family {
        match self {
            GroupSpec::Cyclic { .. } => Family::Cyclic,
            GroupSpec::AbelianP { .. } => Family::AbelianP,
            GroupSpec::Dihedral { .. } => Family::Dihedral,
            GroupSpec::Dicyclic { .. } => Family::Dicyclic,
        }
    }

    /// Group order.
    pub fn order(&self) -> Result<u64> {
        match self {
            GroupSpec::Cyclic { n } => Ok(*n),
            GroupSpec::AbelianP { p, exponents } => {
                let total = exponents.iter().try_fold(0u32, |acc, &e| acc.checked_add(e));
                checked_pow(*p, total.ok_or(Error::Overflow("group order"))?)
            }
            GroupSpec::Dihedral { n } => n.checked_mul(2).ok_or(Error::Overflow("group order")),
            GroupSpec::Dicyclic { n } => n.checked_mul(4).ok_or(Error::Overflow("group order")),
        }
    }

    /// Number of cyclic factors of an abelian p-group; 1 for a cyclic group
    /// of prime-power order.
    pub fn sigma(&self) -> Option<usize> {
        match self {
            GroupSpec::AbelianP { exponents, .. } => Some(exponents.len()),
            GroupSpec::Cyclic { n } if arith::factorize(*n).ok()?.is_prime_power() => Some(1),
            _ => None,
        }
    }

    /// Order of the smallest cyclic factor of an abelian p-group.
    pub fn tau(&self) -> Option<u64> {
        match self {
            GroupSpec::AbelianP { p, exponents } => Some(p.pow(exponents[0])),
            GroupSpec::Cyclic { n } if arith::factorize(*n).ok()?.is_prime_power() => Some(*n),
            _ => None,
        }
    }

    pub fn is_cyclic(&self) -> bool {
        match self {
            GroupSpec::Cyclic { .. } => true,
            GroupSpec::AbelianP { exponents, .. } => exponents.len() == 1,
            GroupSpec::Dihedral { .. } | GroupSpec::Dicyclic { .. } => false,
        }
    }

    /// Cyclic of order 1 or of prime-power order.
    pub fn is_cyclic_prime_power(&self) -> bool {
        match self {
            GroupSpec::Cyclic { n } => *n == 1 || arith::factorize(*n).map(|f| f.is_prime_power()).unwrap_or(false),
            GroupSpec::AbelianP { exponents, .. } => exponents.len() == 1,
            _ => false,
        }
    }

    /// Moduli of the coordinates of an abelian p-group element.
    fn moduli(&self) -> Vec<u64> {
        match self {
            GroupSpec::AbelianP { p, exponents } => exponents.iter().map(|&e| p.pow(e)).collect(),
            _ => Vec::new(),
        }
    }

    pub fn identity(&self) -> Element {
        match self {
            GroupSpec::Cyclic { .. } => Element::Cyclic(0),
            GroupSpec::AbelianP { exponents, .. } => Element::AbelianP(vec![0; exponents.len()]),
            GroupSpec::Dihedral { .. } => Element::Dihedral { i: 0, flip: false },
            GroupSpec::Dicyclic { .. } => Element::Dicyclic { i: 0, flip: false },
        }
    }

    pub fn contains(&self, x: &Element) -> bool {
        match (self, x) {
            (GroupSpec::Cyclic { n }, Element::Cyclic(a)) => a < n,
            (GroupSpec::AbelianP { .. }, Element::AbelianP(v)) => {
                let m = self.moduli();
                v.len() == m.len() && v.iter().zip(&m).all(|(a, m)| a < m)
            }
            (GroupSpec::Dihedral { n }, Element::Dihedral { i, .. }) => i < n,
            (GroupSpec::Dicyclic { n }, Element::Dicyclic { i, .. }) => *i < 2 * n,
            _ => false,
        }
    }

    fn check(&self, x: &Element) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { spec: self.to_string(), element: format!("{x:?}") })
        }
    }

    /// All elements in the natural enumeration order used for vertex indices:
    /// residues ascending; tuples lexicographically; rotations `a^i` before
    /// the coset `a^i b`.
    pub fn elements(&self) -> Result<Vec<Element>> {
        let order = self.order()?;
        let mut out = Vec::with_capacity(usize::try_from(order).map_err(|_| Error::Overflow("group order"))?);
        match self {
            GroupSpec::Cyclic { n } => out.extend((0..*n).map(Element::Cyclic)),
            GroupSpec::AbelianP { .. } => {
                let m = self.moduli();
                let mut cur = vec![0u64; m.len()];
                for _ in 0..order {
                    out.push(Element::AbelianP(cur.clone()));
                    for k in (0..m.len()).rev() {
                        cur[k] += 1;
                        if cur[k] < m[k] {
                            break;
                        }
                        cur[k] = 0;
                    }
                }
            }
            GroupSpec::Dihedral { n } => {
                for flip in [false, true] {
                    out.extend((0..*n).map(|i| Element::Dihedral { i, flip }));
                }
            }
            GroupSpec::Dicyclic { n } => {
                for flip in [false, true] {
                    out.extend((0..2 * n).map(|i| Element::Dicyclic { i, flip }));
                }
            }
        }
        Ok(out)
    }

    /// Position of `x` in [`GroupSpec::elements`].
    pub fn index_of(&self, x: &Element) -> Option<usize> {
        if !self.contains(x) {
            return None;
        }
        let idx = match (self, x) {
            (GroupSpec::Cyclic { .. }, Element::Cyclic(a)) => *a,
            (GroupSpec::AbelianP { .. }, Element::AbelianP(v)) => {
                v.iter().zip(self.moduli()).fold(0, |acc, (a, m)| acc * m + a)
            }
            (GroupSpec::Dihedral { n }, Element::Dihedral { i, flip }) => i + u64::from(*flip) * n,
            (GroupSpec::Dicyclic { n }, Element::Dicyclic { i, flip }) => i + u64::from(*flip) * 2 * n,
            _ => unreachable!(),
        };
        usize::try_from(idx).ok()
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(match (self, x, y) {
            (GroupSpec::Cyclic { n }, Element::Cyclic(a), Element::Cyclic(b)) => Element::Cyclic((a + b) % n),
            (GroupSpec::AbelianP { .. }, Element::AbelianP(u), Element::AbelianP(v)) => Element::AbelianP(
                u.iter().zip(v).zip(self.moduli()).map(|((a, b), m)| (a + b) % m).collect(),
            ),
            (GroupSpec::Dihedral { n }, Element::Dihedral { i, flip }, Element::Dihedral { i: j, flip: g }) => {
                let i = semidirect_exponent(*i, *j, *flip, *n, 0);
                Element::Dihedral { i, flip: flip ^ g }
            }
            (GroupSpec::Dicyclic { n }, Element::Dicyclic { i, flip }, Element::Dicyclic { i: j, flip: g }) => {
                let extra = if *flip && *g { *n } else { 0 };
                let i = semidirect_exponent(*i, *j, *flip, 2 * n, extra);
                Element::Dicyclic { i, flip: flip ^ g }
            }
            _ => unreachable!("membership checked above"),
        })
    }

    pub fn inverse(&self, x: &Element) -> Result<Element> {
        self.check(x)?;
        Ok(match (self, x) {
            (GroupSpec::Cyclic { n }, Element::Cyclic(a)) => Element::Cyclic((n - a) % n),
            (GroupSpec::AbelianP { .. }, Element::AbelianP(v)) => {
                Element::AbelianP(v.iter().zip(self.moduli()).map(|(a, m)| (m - a) % m).collect())
            }
            (GroupSpec::Dihedral { n }, Element::Dihedral { i, flip: false }) => {
                Element::Dihedral { i: (n - i) % n, flip: false }
            }
            // reflections are involutions
            (GroupSpec::Dihedral { .. }, Element::Dihedral { i, flip: true }) => Element::Dihedral { i: *i, flip: true },
            (GroupSpec::Dicyclic { n }, Element::Dicyclic { i, flip: false }) => {
                Element::Dicyclic { i: (2 * n - i) % (2 * n), flip: false }
            }
            // (a^i b)^-1 = (a^i b)^3 = a^(n+i) b
            (GroupSpec::Dicyclic { n }, Element::Dicyclic { i, flip: true }) => {
                Element::Dicyclic { i: (i + n) % (2 * n), flip: true }
            }
            _ => unreachable!(),
        })
    }

    pub fn power(&self, x: &Element, k: u64) -> Result<Element> {
        self.check(x)?;
        let mut result = self.identity();
        let mut base = x.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = self.multiply(&result, &base)?;
            }
            base = self.multiply(&base, &base)?;
            k >>= 1;
        }
        Ok(result)
    }

    /// Order of `x`, from arithmetic shortcuts: `n/gcd(a, n)` for residues,
    /// the lcm of coordinate orders for tuples, and the cyclic structure of
    /// `<a>` and `<a^i b>` for the non-abelian families.
    pub fn element_order(&self, x: &Element) -> Result<u64> {
        self.check(x)?;
        let residue_order = |a: u64, m: u64| m / arith::gcd(a, m);
        Ok(match (self, x) {
            (GroupSpec::Cyclic { n }, Element::Cyclic(a)) => residue_order(*a, *n),
            (GroupSpec::AbelianP { .. }, Element::AbelianP(v)) => {
                let mut acc = 1u64;
                for (a, m) in v.iter().zip(self.moduli()) {
                    acc = arith::lcm(acc, residue_order(*a, m))?;
                }
                acc
            }
            (GroupSpec::Dihedral { n }, Element::Dihedral { i, flip: false }) => residue_order(*i, *n),
            (GroupSpec::Dihedral { .. }, Element::Dihedral { flip: true, .. }) => 2,
            (GroupSpec::Dicyclic { n }, Element::Dicyclic { i, flip: false }) => residue_order(*i, 2 * n),
            (GroupSpec::Dicyclic { .. }, Element::Dicyclic { flip: true, .. }) => 4,
            _ => unreachable!(),
        })
    }

    /// Order of `x` by multiplying until the identity reappears.
    pub fn element_order_by_powering(&self, x: &Element) -> Result<u64> {
        self.check(x)?;
        let e = self.identity();
        let mut cur = x.clone();
        let mut k = 1;
        while cur != e {
            cur = self.multiply(&cur, x)?;
            k += 1;
        }
        Ok(k)
    }

    /// `<x>` listed as `x^0, x^1, ..., x^(o(x)-1)`.
    pub fn cyclic_subgroup(&self, x: &Element) -> Result<Vec<Element>> {
        self.check(x)?;
        let e = self.identity();
        let mut out = vec![e.clone()];
        let mut cur = x.clone();
        while cur != e {
            let next = self.multiply(&cur, x)?;
            out.push(cur);
            cur = next;
        }
        Ok(out)
    }

    /// The class `[x]` of elements generating the same cyclic subgroup as
    /// `x`: the powers `x^k` with `gcd(k, o(x)) = 1`, in increasing `k`.
    pub fn gen_class(&self, x: &Element) -> Result<Vec<Element>> {
        let powers = self.cyclic_subgroup(x)?;
        let order = powers.len() as u64;
        Ok(powers
            .into_iter()
            .enumerate()
            .filter(|&(k, _)| arith::gcd(k as u64, order) == 1)
            .map(|(_, y)| y)
            .collect())
    }

    /// Human-readable element notation: `7`, `(1,2)`, `e`, `a^3`, `a^3*b`.
    pub fn label(&self, x: &Element) -> String {
        match x {
            Element::Cyclic(a) => a.to_string(),
            Element::AbelianP(v) => {
                let parts: Vec<String> = v.iter().map(u64::to_string).collect();
                format!("({})", parts.join(","))
            }
            Element::Dihedral { i, flip } | Element::Dicyclic { i, flip } => {
                let rot = match i {
                    0 => String::new(),
                    1 => "a".to_string(),
                    i => format!("a^{i}"),
                };
                match (rot.is_empty(), flip) {
                    (true, false) => "e".to_string(),
                    (true, true) => "b".to_string(),
                    (false, false) => rot,
                    (false, true) => format!("{rot}*b"),
                }
            }
        }
    }
}

/// Exponent of `a` in `(a^i b^f)(a^j b^g)` for groups where `b a^j = a^-j b`;
/// `extra` carries `b^2` when both factors lie in the `b` coset.
fn semidirect_exponent(i: u64, j: u64, flip: bool, modulus: u64, extra: u64) -> u64 {
    let j = if flip { (modulus - j % modulus) % modulus } else { j };
    (i + j + extra) % modulus
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic { n } => write!(f, "cyclic:{n}"),
            GroupSpec::AbelianP { p, exponents } => {
                let parts: Vec<String> = exponents.iter().map(u32::to_string).collect();
                write!(f, "abelianp:{p}:{}", parts.join(","))
            }
            GroupSpec::Dihedral { n } => write!(f, "dihedral:{n}"),
            GroupSpec::Dicyclic { n } => write!(f, "dicyclic:{n}"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Parses `cyclic:<n>`, `abelianp:<p>:<e1>,<e2>,...`, `dihedral:<n>` or
    /// `dicyclic:<n>`.
    fn from_str(s: &str) -> Result<Self> {
        let invalid = || Error::InvalidSpec(format!("cannot parse `{s}`"));
        let int = |t: &str| t.trim().parse::<u64>().map_err(|_| invalid());
        let mut parts = s.trim().split(':');
        let family: Family = parts.next().ok_or_else(invalid)?.parse()?;
        let spec = match family {
            Family::Cyclic => GroupSpec::cyclic(int(parts.next().ok_or_else(invalid)?)?)?,
            Family::Dihedral => GroupSpec::dihedral(int(parts.next().ok_or_else(invalid)?)?)?,
            Family::Dicyclic => GroupSpec::dicyclic(int(parts.next().ok_or_else(invalid)?)?)?,
            Family::AbelianP => {
                let p = int(parts.next().ok_or_else(invalid)?)?;
                let exponents = parts
                    .next()
                    .ok_or_else(invalid)?
                    .split(',')
                    .map(|t| t.trim().parse::<u32>().map_err(|_| invalid()))
                    .collect::<Result<Vec<_>>>()?;
                GroupSpec::abelian_p(p, exponents)?
            }
        };
        if parts.next().is_some() {
            return Err(invalid());
        }
        Ok(spec)
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Every abelian p-group signature `(p, exponents)` with order in `[lo, hi]`,
/// one per isomorphism class, ordered by order and then by exponents.
pub fn abelian_p_groups(lo: u64, hi: u64) -> Vec<GroupSpec> {
    fn partitions(total: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if total == 0 {
            let mut v = prefix.clone();
            v.reverse();
            out.push(v);
            return;
        }
        for part in (1..=max_part.min(total)).rev() {
            prefix.push(part);
            partitions(total - part, part, prefix, out);
            prefix.pop();
        }
    }

    let mut specs = Vec::new();
    for p in (2..=hi).filter(|&p| arith::is_prime(p)) {
        let mut total = 1u32;
        while let Ok(order) = checked_pow(p, total) {
            if order > hi {
                break;
            }
            if order >= lo {
                let mut parts = Vec::new();
                partitions(total, total, &mut Vec::new(), &mut parts);
                for exponents in parts {
                    specs.push((order, GroupSpec::AbelianP { p, exponents }));
                }
            }
            total += 1;
        }
    }
    specs.sort();
    specs.into_iter().map(|(_, s)| s).collect()
}
