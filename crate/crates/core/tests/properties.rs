use proptest::prelude::*;

use cyclotile::groupring::ctx::{divisors_of, gcd};
use cyclotile::{
    affine_canonical, difference_multiset, find_spectrum, find_tiling_complement, mask_polynomial, phi_divides,
    project, spectra_are_dual, t1_check, verify_spectral_pair, verify_tiling, zero_divisor_set, Budget, CyclicGroupCtx,
    CyclicMultiset,
};

/// A nonempty subset of `Z_n` with `n` in `lo..=hi`.
fn subset(lo: usize, hi: usize) -> impl Strategy<Value = CyclicMultiset> {
    (lo..=hi)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n), 0..n))
        .prop_map(|(n, bits, forced)| {
            let ctx = CyclicGroupCtx::new(n).unwrap();
            let elems = (0..n).filter(|&x| bits[x] || x == forced);
            CyclicMultiset::set(&ctx, elems).unwrap()
        })
}

/// A multiset on `Z_n` with multiplicities up to 3.
fn multiset_on(n: usize) -> impl Strategy<Value = CyclicMultiset> {
    proptest::collection::vec(0u32..4, n)
        .prop_map(move |m| CyclicMultiset::from_mults(&CyclicGroupCtx::new(n).unwrap(), m).unwrap())
}

/// A unit of `Z_n` picked by index.
fn unit(n: usize, pick: usize) -> usize {
    let units: Vec<usize> = (1..=n).filter(|&a| gcd(a, n) == 1).map(|a| a % n).collect();
    units[pick % units.len()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn zero_set_is_affine_invariant(s in subset(1, 60), pick in any::<usize>(), b in any::<usize>()) {
        let n = s.n();
        let image = s.affine_image(unit(n, pick), b % n);
        prop_assert_eq!(zero_divisor_set(&image).unwrap(), zero_divisor_set(&s).unwrap());
    }

    #[test]
    fn canonical_form_is_an_orbit_invariant(s in subset(1, 40), pick in any::<usize>(), b in any::<usize>()) {
        let n = s.n();
        let c = affine_canonical(&s);
        prop_assert_eq!(&affine_canonical(&s.affine_image(unit(n, pick), b % n)), &c);
        prop_assert_eq!(&affine_canonical(&c), &c);
        prop_assert!(c.contains(0));
        prop_assert!(c.elements() <= s.translate((n - s.elements()[0]) % n).elements());
    }

    #[test]
    fn decisions_are_affine_invariant(s in subset(1, 24), pick in any::<usize>(), b in any::<usize>()) {
        let n = s.n();
        let image = s.affine_image(unit(n, pick), b % n);
        let spectral = |x: &CyclicMultiset| find_spectrum(x, Budget::UNLIMITED).unwrap().outcome.is_found();
        let tile = |x: &CyclicMultiset| find_tiling_complement(x, Budget::UNLIMITED).unwrap().outcome.is_found();
        prop_assert_eq!(spectral(&image), spectral(&s));
        prop_assert_eq!(tile(&image), tile(&s));
    }

    #[test]
    fn convolution_is_polynomial_product((a, b) in (1usize..40).prop_flat_map(|n| (multiset_on(n), multiset_on(n)))) {
        let n = a.n();
        let ab = a.convolve(&b).unwrap();
        prop_assert_eq!(ab.total(), a.total() * b.total());
        prop_assert_eq!(&ab, &b.convolve(&a).unwrap());
        let product = mask_polynomial(&a).mul(&mask_polynomial(&b)).rem_x_pow_minus_one(n);
        prop_assert_eq!(mask_polynomial(&ab), product);
        // Φ_d is irreducible, so it divides a product exactly when it divides a factor
        if !a.is_empty() && !b.is_empty() {
            for d in divisors_of(n) {
                prop_assert_eq!(
                    phi_divides(d, &ab).unwrap(),
                    phi_divides(d, &a).unwrap() || phi_divides(d, &b).unwrap()
                );
            }
        }
    }

    #[test]
    fn difference_multiset_has_the_same_zeros(s in subset(1, 48)) {
        let diff = difference_multiset(&s).unwrap();
        prop_assert_eq!(diff.total(), s.total() * s.total());
        prop_assert_eq!(diff.mult(0) as u64, s.total());
        prop_assert_eq!(zero_divisor_set(&diff).unwrap(), zero_divisor_set(&s).unwrap());
    }

    #[test]
    fn projection_keeps_zeros_below_m(s in subset(1, 60), pick in any::<usize>()) {
        let n = s.n();
        let ds = divisors_of(n);
        let m = ds[pick % ds.len()];
        let p = project(&s, m).unwrap();
        prop_assert_eq!(p.total(), s.total());
        for d in divisors_of(m) {
            prop_assert_eq!(phi_divides(d, &p).unwrap(), phi_divides(d, &s).unwrap());
        }
    }

    #[test]
    fn tiling_is_symmetric(s in subset(1, 24)) {
        if let Some(cert) = find_tiling_complement(&s, Budget::UNLIMITED).unwrap().outcome.found() {
            prop_assert!(cert.verify());
            prop_assert!(verify_tiling(&cert.complement, &s).unwrap());
            // every tile satisfies (T1), and so does its complement
            prop_assert!(t1_check(&s).unwrap().holds);
            prop_assert!(t1_check(&cert.complement).unwrap().holds);
        }
    }

    #[test]
    fn spectra_verify_and_transpose(s in subset(1, 30)) {
        if let Some(cert) = find_spectrum(&s, Budget::UNLIMITED).unwrap().outcome.found() {
            prop_assert!(cert.verify());
            prop_assert!(spectra_are_dual(cert));
            prop_assert!(verify_spectral_pair(&cert.set, &cert.spectrum).unwrap());
            // translating either side keeps the pair spectral
            let n = s.n();
            prop_assert!(verify_spectral_pair(&s.translate(1 % n), &cert.spectrum.translate(n / 2)).unwrap());
        }
    }

    #[test]
    fn budgets_never_change_decided_answers(s in subset(1, 24), budget in 0u64..200) {
        let full = find_spectrum(&s, Budget::UNLIMITED).unwrap().outcome.decided();
        let limited = find_spectrum(&s, Budget(budget)).unwrap();
        if let Some(answer) = limited.outcome.decided() {
            prop_assert_eq!(Some(answer), full);
        }
        prop_assert!(limited.nodes <= budget || !limited.outcome.is_exhausted());
    }
}
