//! Single-element distributions: a value per Young diagram, with the
//! Moebius/zeta convolutions that exchange moments and free cumulants.

use combinat::{Scalar, Shape};
use multfn::{convolve, moebius, MultFn};
use num_traits::Zero;

/// Moments of one element: a value for every diagram with at most `order`
/// boxes. Row counts play the role of correlation order, so `(3, 1)` is the
/// second-order moment pairing a cube with a single factor.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    order: usize,
    phi: MultFn,
}

/// Free cumulants of one element, indexed like `Distribution`.
#[derive(Debug, Clone, PartialEq)]
pub struct CumulantSet {
    order: usize,
    kappa: MultFn,
}

impl Distribution {
    /// Requires a value for every diagram up to the bound; the missing
    /// shapes are returned otherwise.
    pub fn new(phi: MultFn, order: usize) -> Result<Self, Vec<Shape>> {
        let missing = phi.missing_shapes(order);
        if missing.is_empty() {
            Ok(Distribution { order, phi })
        } else {
            Err(missing)
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn moments(&self) -> &MultFn {
        &self.phi
    }

    /// First-order moment of the n-th power.
    pub fn alpha(&self, n: usize) -> Scalar {
        self.phi
            .get(&Shape::new(vec![n]))
            .cloned()
            .expect("within the order bound")
    }
}

impl CumulantSet {
    pub fn new(kappa: MultFn, order: usize) -> Result<Self, Vec<Shape>> {
        let missing = kappa.missing_shapes(order);
        if missing.is_empty() {
            Ok(CumulantSet { order, kappa })
        } else {
            Err(missing)
        }
    }

    /// A table that vanishes everywhere up to the bound.
    pub fn vanishing(order: usize) -> Self {
        let kappa = MultFn::from_entries(
            Shape::all_up_to(order).into_iter().map(|s| (s, Scalar::zero())),
        );
        CumulantSet { order, kappa }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn cumulants(&self) -> &MultFn {
        &self.kappa
    }
}

/// `kappa = phi * mu`.
pub fn cumulants_from_moments(d: &Distribution) -> CumulantSet {
    let mu = moebius::table_recursive(d.order);
    CumulantSet {
        order: d.order,
        kappa: convolve(&d.phi, &mu, d.order),
    }
}

/// `phi = kappa * zeta`.
pub fn moments_from_cumulants(c: &CumulantSet) -> Distribution {
    let zeta = MultFn::zeta(c.order);
    Distribution {
        order: c.order,
        phi: convolve(&c.kappa, &zeta, c.order),
    }
}

/// Cumulants of a sum of free elements: plain addition of the tables.
pub fn add_free(a: &CumulantSet, b: &CumulantSet) -> CumulantSet {
    assert_eq!(a.order, b.order, "order bounds differ");
    let kappa = MultFn::from_entries(a.kappa.entries().map(|(s, v)| {
        let w = b.kappa.get(s).expect("same bound");
        (s.clone(), v + w)
    }));
    CumulantSet {
        order: a.order,
        kappa,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use combinat::{int, ratio};

    // annular noncrossing pairing counts per diagram, the moment table of
    // the standard semicircle element
    pub(crate) fn semicircle(order: usize) -> Distribution {
        let counts = [
            ("(1)", 0),
            ("(2)", 1),
            ("(1,1)", 1),
            ("(3)", 0),
            ("(2,1)", 0),
            ("(1,1,1)", 0),
            ("(4)", 2),
            ("(3,1)", 3),
            ("(2,2)", 2),
            ("(2,1,1)", 2),
            ("(1,1,1,1)", 0),
        ];
        let phi = MultFn::from_entries(
            counts
                .iter()
                .filter(|(s, _)| s.parse::<Shape>().unwrap().size() <= order)
                .map(|&(s, v)| (s.parse().unwrap(), int(v))),
        );
        Distribution::new(phi, order).unwrap()
    }

    #[test]
    fn semicircle_has_a_single_nonvanishing_cumulant() {
        let kappa = cumulants_from_moments(&semicircle(4));
        for (shape, value) in kappa.cumulants().entries() {
            if shape.parts() == [2] {
                assert_eq!(value, &int(1), "pair cumulant");
            } else {
                assert!(value.is_zero(), "kappa({shape}) = {value}");
            }
        }
    }

    #[test]
    fn a_single_first_cumulant_gives_powers_of_itself() {
        let c = ratio(5, 3);
        let mut kappa = CumulantSet::vanishing(2);
        kappa.kappa.insert("(1)".parse().unwrap(), c.clone());
        let d = moments_from_cumulants(&kappa);
        assert_eq!(d.alpha(1), c);
        assert_eq!(d.alpha(2), &c * &c);
        assert!(d
            .moments()
            .get(&"(1,1)".parse().unwrap())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn moment_cumulant_conversion_round_trips() {
        let phi = MultFn::from_entries(
            Shape::all_up_to(5)
                .into_iter()
                .zip(1i64..)
                .map(|(s, i)| (s, ratio(3 * i - 10, i + 1))),
        );
        let d = Distribution::new(phi, 5).unwrap();
        let back = moments_from_cumulants(&cumulants_from_moments(&d));
        assert_eq!(d, back);
    }

    #[test]
    fn zeta_moments_come_from_a_pure_first_cumulant() {
        // kappa supported on the one-box diagram alone has the disc
        // indicator as its moment table, and the pair round-trips
        let kappa = CumulantSet::new(MultFn::delta(4), 4).unwrap();
        let d = moments_from_cumulants(&kappa);
        let zeta = MultFn::zeta(4);
        for (s, v) in d.moments().entries() {
            assert_eq!(v, zeta.get(s).unwrap(), "at {s}");
        }
        assert_eq!(cumulants_from_moments(&d), kappa);
    }

    #[test]
    fn free_addition_is_additive_on_tables() {
        let a = cumulants_from_moments(&semicircle(4));
        let sum = add_free(&a, &a);
        assert_eq!(sum.cumulants().get(&"(2)".parse().unwrap()), Some(&int(2)));
        let zero = CumulantSet::vanishing(4);
        assert_eq!(add_free(&a, &zero), a);
    }

    #[test]
    fn missing_shapes_are_reported() {
        let phi = MultFn::from_entries([("(1)".parse().unwrap(), int(1))]);
        let err = Distribution::new(phi, 2).unwrap_err();
        let names: Vec<String> = err.iter().map(|s| s.to_string()).collect();
        assert_eq!(names, ["(2)", "(1,1)"]);
    }
}
