//! Dynamically typed semirings and elements.
//!
//! The generic API in the other modules is statically typed. This layer lets
//! callers pick a family at run time and combine families (polynomials over
//! a table, fractions of ℕ). Elements carry no reference to their semiring, so
//! every operation checks that its inputs have the shape the handle expects.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::finite::{FiniteSemiring, McSet};
use crate::frac::{localize, FracError, Fraction, FractionBase, Fractions};
use crate::poly::{Polynomial, Polynomials};
use crate::semiring::{Boolean, ElementSyntax, MinPlus, Natural, Naturals, Semiring, Tropical};
use crate::verdict::Verdict;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemiringHandle {
    Naturals,
    Boolean,
    TropicalNat,
    FiniteTable(Arc<FiniteSemiring>),
    PolynomialOver(Box<SemiringHandle>),
    FractionsOver(Box<SemiringHandle>, McSet<Element>),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Nat(Natural),
    Bool(bool),
    Trop(MinPlus),
    Index(usize),
    Poly(Vec<Element>),
    Frac(Box<Element>, Box<Element>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HandleError {
    #[error("element {element} does not belong to {semiring}")]
    MismatchedSemiring { semiring: String, element: String },
    #[error("{0} is not supported for this family")]
    Unsupported(String),
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error(transparent)]
    Frac(#[from] FracError),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Nat(n) => write!(f, "{n}"),
            Element::Bool(b) => write!(f, "{}", u8::from(*b)),
            Element::Trop(t) => write!(f, "{t}"),
            Element::Index(i) => write!(f, "{i}"),
            Element::Poly(cs) => {
                let parts: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
                write!(f, "[{}]", parts.join(", "))
            }
            Element::Frac(n, d) => write!(f, "{n}/{d}"),
        }
    }
}

/// Runs `$body` with `$fr` bound to the typed fraction semiring of a handle
/// whose base is one of the three registered fraction bases.
macro_rules! with_fractions {
    ($base:expr, $t:expr, |$fr:ident, $to:ident, $from:ident| $body:expr) => {
        match $base {
            SemiringHandle::Naturals => {
                let $to = |e: &Element| match e {
                    Element::Nat(n) => Some(n.clone()),
                    _ => None,
                };
                let $from = |e: Natural| Element::Nat(e);
                let $fr = typed_fractions(Naturals, $t, $to)?;
                $body
            }
            SemiringHandle::TropicalNat => {
                let $to = |e: &Element| match e {
                    Element::Trop(t) => Some(*t),
                    _ => None,
                };
                let $from = |e: MinPlus| Element::Trop(e);
                let $fr = typed_fractions(Tropical, $t, $to)?;
                $body
            }
            SemiringHandle::Boolean => {
                let $to = |e: &Element| match e {
                    Element::Bool(b) => Some(*b),
                    _ => None,
                };
                let $from = |e: bool| Element::Bool(e);
                let $fr = typed_fractions(Boolean, $t, $to)?;
                $body
            }
            other => {
                return Err(HandleError::Unsupported(format!(
                    "fractions over {}",
                    other.name()
                )))
            }
        }
    };
}

fn typed_fractions<S: FractionBase>(
    base: S,
    t: &McSet<Element>,
    to: impl Fn(&Element) -> Option<S::Elem>,
) -> Result<Fractions<S>, HandleError> {
    let convert = |xs: &mut dyn Iterator<Item = &Element>| -> Result<Vec<S::Elem>, HandleError> {
        xs.map(|x| to(x).ok_or_else(|| HandleError::Parse(x.to_string())))
            .collect()
    };
    let typed = match t {
        McSet::Units => McSet::Units,
        McSet::Nonzero => McSet::Nonzero,
        McSet::Generated(g) => McSet::Generated(convert(&mut g.iter())?),
        McSet::Members(m) => McSet::Members(convert(&mut m.iter())?.into_iter().collect()),
    };
    Ok(localize(base, typed)?)
}

impl SemiringHandle {
    pub fn name(&self) -> String {
        match self {
            SemiringHandle::Naturals => Naturals.name(),
            SemiringHandle::Boolean => Boolean.name(),
            SemiringHandle::TropicalNat => Tropical.name(),
            SemiringHandle::FiniteTable(t) => t.name(),
            SemiringHandle::PolynomialOver(b) => format!("{}[X]", b.name()),
            SemiringHandle::FractionsOver(b, t) => match t {
                McSet::Nonzero => format!("F({})", b.name()),
                _ => format!("{}_[{}]", b.name(), t),
            },
        }
    }

    pub fn zero(&self) -> Element {
        match self {
            SemiringHandle::Naturals => Element::Nat(Naturals.zero()),
            SemiringHandle::Boolean => Element::Bool(false),
            SemiringHandle::TropicalNat => Element::Trop(MinPlus::Infinity),
            SemiringHandle::FiniteTable(_) => Element::Index(0),
            SemiringHandle::PolynomialOver(_) => Element::Poly(Vec::new()),
            SemiringHandle::FractionsOver(b, _) => {
                Element::Frac(Box::new(b.zero()), Box::new(b.one()))
            }
        }
    }

    pub fn one(&self) -> Element {
        match self {
            SemiringHandle::Naturals => Element::Nat(Naturals.one()),
            SemiringHandle::Boolean => Element::Bool(true),
            SemiringHandle::TropicalNat => Element::Trop(MinPlus::Finite(0)),
            SemiringHandle::FiniteTable(_) => Element::Index(1),
            SemiringHandle::PolynomialOver(b) => Element::Poly(vec![b.one()]),
            SemiringHandle::FractionsOver(b, _) => {
                Element::Frac(Box::new(b.one()), Box::new(b.one()))
            }
        }
    }

    /// Whether `x` has the shape and canonical form of an element of `self`.
    pub fn contains(&self, x: &Element) -> bool {
        match (self, x) {
            (SemiringHandle::Naturals, Element::Nat(_))
            | (SemiringHandle::Boolean, Element::Bool(_))
            | (SemiringHandle::TropicalNat, Element::Trop(_)) => true,
            (SemiringHandle::FiniteTable(t), Element::Index(i)) => *i < t.order(),
            (SemiringHandle::PolynomialOver(b), Element::Poly(cs)) => {
                cs.iter().all(|c| b.contains(c)) && cs.last().is_none_or(|c| *c != b.zero())
            }
            (SemiringHandle::FractionsOver(b, _), Element::Frac(n, d)) => {
                b.contains(n) && b.contains(d) && **d != b.zero()
            }
            _ => false,
        }
    }

    fn check(&self, x: &Element) -> Result<(), HandleError> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(HandleError::MismatchedSemiring {
                semiring: self.name(),
                element: x.to_string(),
            })
        }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element, HandleError> {
        self.binary(a, b, false)
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element, HandleError> {
        self.binary(a, b, true)
    }

    fn binary(&self, a: &Element, b: &Element, product: bool) -> Result<Element, HandleError> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (self, a, b) {
            (SemiringHandle::Naturals, Element::Nat(x), Element::Nat(y)) => {
                Element::Nat(if product { x * y } else { x + y })
            }
            (SemiringHandle::Boolean, Element::Bool(x), Element::Bool(y)) => {
                Element::Bool(if product { *x && *y } else { *x || *y })
            }
            (SemiringHandle::TropicalNat, Element::Trop(x), Element::Trop(y)) => {
                Element::Trop(if product {
                    Tropical.mul(x, y)
                } else {
                    Tropical.add(x, y)
                })
            }
            (SemiringHandle::FiniteTable(t), Element::Index(x), Element::Index(y)) => {
                Element::Index(if product {
                    t.times(*x, *y)
                } else {
                    t.plus(*x, *y)
                })
            }
            (SemiringHandle::PolynomialOver(base), Element::Poly(f), Element::Poly(g)) => {
                let mut out = if product {
                    let mut out = vec![base.zero(); (f.len() + g.len()).saturating_sub(1)];
                    for (i, x) in f.iter().enumerate() {
                        for (j, y) in g.iter().enumerate() {
                            out[i + j] = base.add(&out[i + j], &base.mul(x, y)?)?;
                        }
                    }
                    out
                } else {
                    let zero = base.zero();
                    (0..f.len().max(g.len()))
                        .map(|k| base.add(f.get(k).unwrap_or(&zero), g.get(k).unwrap_or(&zero)))
                        .collect::<Result<Vec<_>, _>>()?
                };
                let zero = base.zero();
                while out.last() == Some(&zero) {
                    out.pop();
                }
                Element::Poly(out)
            }
            (
                SemiringHandle::FractionsOver(base, t),
                Element::Frac(n1, d1),
                Element::Frac(n2, d2),
            ) => {
                with_fractions!(base.as_ref(), t, |fr, to, from| {
                    let typed = |n: &Element, d: &Element| Fraction {
                        num: to(n).expect("checked"),
                        den: to(d).expect("checked"),
                    };
                    let (x, y) = (typed(n1, d1), typed(n2, d2));
                    let r = if product {
                        fr.mul(&x, &y)
                    } else {
                        fr.add(&x, &y)
                    };
                    Element::Frac(Box::new(from(r.num)), Box::new(from(r.den)))
                })
            }
            _ => unreachable!("shapes checked"),
        })
    }

    pub fn is_unit(&self, a: &Element) -> Result<bool, HandleError> {
        self.check(a)?;
        Ok(match (self, a) {
            (SemiringHandle::Naturals, Element::Nat(x)) => Naturals.is_unit(x),
            (SemiringHandle::Boolean, Element::Bool(x)) => *x,
            (SemiringHandle::TropicalNat, Element::Trop(x)) => Tropical.is_unit(x),
            (SemiringHandle::FiniteTable(t), Element::Index(x)) => t.is_unit(x),
            // a degree-0 polynomial with unit coefficient; exact over semidomain bases
            (SemiringHandle::PolynomialOver(b), Element::Poly(cs)) => {
                cs.len() == 1 && b.is_unit(&cs[0])?
            }
            (SemiringHandle::FractionsOver(base, t), Element::Frac(n, d)) => {
                with_fractions!(base.as_ref(), t, |fr, to, _from| {
                    fr.is_unit(&Fraction {
                        num: to(n).expect("checked"),
                        den: to(d).expect("checked"),
                    })
                })
            }
            _ => unreachable!("shape checked"),
        })
    }

    pub fn is_semidomain(&self) -> Result<Verdict, HandleError> {
        Ok(match self {
            SemiringHandle::Naturals => Naturals.is_semidomain(),
            SemiringHandle::Boolean => Boolean.is_semidomain(),
            SemiringHandle::TropicalNat => Tropical.is_semidomain(),
            SemiringHandle::FiniteTable(t) => t.is_semidomain(),
            SemiringHandle::PolynomialOver(b) => match b.as_ref() {
                SemiringHandle::Naturals => Polynomials::new(Naturals).is_semidomain(),
                SemiringHandle::Boolean => Polynomials::new(Boolean).is_semidomain(),
                SemiringHandle::TropicalNat => Polynomials::new(Tropical).is_semidomain(),
                SemiringHandle::FiniteTable(t) => {
                    Polynomials::new(t.as_ref().clone()).is_semidomain()
                }
                other => {
                    return Err(HandleError::Unsupported(format!(
                        "cancellation check on {}[X]",
                        other.name()
                    )))
                }
            },
            SemiringHandle::FractionsOver(base, t) => {
                with_fractions!(base.as_ref(), t, |fr, _to, _from| fr.is_semidomain())
            }
        })
    }

    /// Parses an element literal: base literals, `a0 + a1 X + …` for
    /// polynomials, `a/b` for fractions.
    pub fn parse_element(&self, text: &str) -> Result<Element, HandleError> {
        let bad = || HandleError::Parse(text.to_string());
        let t = text.trim();
        let x = match self {
            SemiringHandle::Naturals => Element::Nat(Naturals.parse_element(t).ok_or_else(bad)?),
            SemiringHandle::Boolean => Element::Bool(Boolean.parse_element(t).ok_or_else(bad)?),
            SemiringHandle::TropicalNat => {
                Element::Trop(Tropical.parse_element(t).ok_or_else(bad)?)
            }
            SemiringHandle::FiniteTable(s) => Element::Index(s.parse_element(t).ok_or_else(bad)?),
            SemiringHandle::PolynomialOver(b) => {
                let mut coeffs: Vec<Element> = Vec::new();
                for term in t.split('+') {
                    let term: String = term.chars().filter(|c| !c.is_whitespace()).collect();
                    let (c, k) = match term.find(['X', 'x']) {
                        None => (term.as_str(), 0usize),
                        Some(p) => {
                            let rest = &term[p + 1..];
                            let k = match rest.strip_prefix('^') {
                                Some(d) => d.parse().map_err(|_| bad())?,
                                None if rest.is_empty() => 1,
                                None => return Err(bad()),
                            };
                            (&term[..p], k)
                        }
                    };
                    let c = if c.is_empty() {
                        b.one()
                    } else {
                        b.parse_element(c)?
                    };
                    if coeffs.len() <= k {
                        coeffs.resize(k + 1, b.zero());
                    }
                    coeffs[k] = b.add(&coeffs[k], &c)?;
                }
                let zero = b.zero();
                while coeffs.last() == Some(&zero) {
                    coeffs.pop();
                }
                Element::Poly(coeffs)
            }
            SemiringHandle::FractionsOver(base, mc) => {
                let (n, d) = t.split_once('/').unwrap_or((t, ""));
                let n = base.parse_element(n)?;
                let d = if d.is_empty() {
                    base.one()
                } else {
                    base.parse_element(d)?
                };
                with_fractions!(base.as_ref(), mc, |fr, to, from| {
                    let x = fr.fraction(to(&n).ok_or_else(bad)?, to(&d).ok_or_else(bad)?)?;
                    Element::Frac(Box::new(from(x.num)), Box::new(from(x.den)))
                })
            }
        };
        self.check(&x)?;
        Ok(x)
    }

    pub fn render(&self, x: &Element) -> String {
        match (self, x) {
            (SemiringHandle::PolynomialOver(b), Element::Poly(cs)) => {
                if cs.is_empty() {
                    return b.render(&b.zero());
                }
                let zero = b.zero();
                let terms: Vec<String> = cs
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| **c != zero)
                    .map(|(k, c)| match k {
                        0 => b.render(c),
                        1 => format!("{}X", b.render(c)),
                        _ => format!("{}X^{k}", b.render(c)),
                    })
                    .collect();
                terms.join(" + ")
            }
            (SemiringHandle::FractionsOver(b, _), Element::Frac(n, d)) => {
                if **d == b.one() {
                    b.render(n)
                } else {
                    format!("{}/{}", b.render(n), b.render(d))
                }
            }
            _ => x.to_string(),
        }
    }
}

/// Typed polynomials convert to handle elements coefficientwise.
pub fn poly_element<E>(f: &Polynomial<E>, wrap: impl Fn(&E) -> Element) -> Element {
    Element::Poly(f.coefficients().iter().map(wrap).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::nat;

    fn n(v: u64) -> Element {
        Element::Nat(nat(v))
    }

    #[test]
    fn base_operations() {
        let h = SemiringHandle::Naturals;
        assert_eq!(h.add(&n(2), &n(3)), Ok(n(5)));
        assert_eq!(h.mul(&n(2), &n(3)), Ok(n(6)));
        let t = SemiringHandle::TropicalNat;
        let f = |v| Element::Trop(MinPlus::Finite(v));
        assert_eq!(t.add(&f(2), &f(3)), Ok(f(2)));
        assert_eq!(t.mul(&f(2), &f(3)), Ok(f(5)));
        assert_eq!(
            t.mul(&Element::Trop(MinPlus::Infinity), &f(3)),
            Ok(Element::Trop(MinPlus::Infinity))
        );
        let b = SemiringHandle::Boolean;
        assert_eq!(
            b.add(&Element::Bool(true), &Element::Bool(true)),
            Ok(Element::Bool(true))
        );
    }

    #[test]
    fn mismatched_elements_are_rejected() {
        let h = SemiringHandle::Naturals;
        assert!(matches!(
            h.add(&n(2), &Element::Bool(true)),
            Err(HandleError::MismatchedSemiring { .. })
        ));
        let c = SemiringHandle::FiniteTable(Arc::new(FiniteSemiring::chain3()));
        assert!(c.mul(&Element::Index(2), &Element::Index(3)).is_err());
        assert_eq!(
            c.mul(&Element::Index(2), &Element::Index(1)),
            Ok(Element::Index(2))
        );
    }

    #[test]
    fn units_in_every_family() {
        let handles = [
            SemiringHandle::Naturals,
            SemiringHandle::Boolean,
            SemiringHandle::TropicalNat,
            SemiringHandle::FiniteTable(Arc::new(FiniteSemiring::chain3())),
            SemiringHandle::PolynomialOver(Box::new(SemiringHandle::Naturals)),
            SemiringHandle::FractionsOver(Box::new(SemiringHandle::Naturals), McSet::Nonzero),
        ];
        for h in &handles {
            assert_eq!(h.is_unit(&h.one()), Ok(true), "{}", h.name());
            assert_eq!(h.is_unit(&h.zero()), Ok(false), "{}", h.name());
        }
    }

    #[test]
    fn polynomials_and_fractions() {
        let p = SemiringHandle::PolynomialOver(Box::new(SemiringHandle::Naturals));
        let f = p.parse_element("1 + X").unwrap();
        let sq = p.mul(&f, &f).unwrap();
        assert_eq!(p.render(&sq), "1 + 2X + 1X^2");
        let b = SemiringHandle::PolynomialOver(Box::new(SemiringHandle::Boolean));
        let g = b.parse_element("1 + X").unwrap();
        assert_eq!(b.render(&b.mul(&g, &g).unwrap()), "1 + 1X + 1X^2");
        assert!(!b.is_semidomain().unwrap().holds);

        let q = SemiringHandle::FractionsOver(
            Box::new(SemiringHandle::Naturals),
            McSet::Generated(vec![n(2)]),
        );
        let x = q.parse_element("3/4").unwrap();
        let y = q.parse_element("2/4").unwrap();
        assert_eq!(q.render(&y), "1/2");
        assert_eq!(q.render(&q.add(&x, &y).unwrap()), "5/4");
        assert!(q.parse_element("1/3").is_err());
        assert!(!q.is_unit(&q.parse_element("3").unwrap()).unwrap());
        assert!(q.is_unit(&q.parse_element("2").unwrap()).unwrap());
    }
}
