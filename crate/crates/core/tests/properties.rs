use proptest::prelude::*;
use rand::Rng;
use turan_lab::bounds::{evaluate_verdict, turan_ratio};
use turan_lab::classes::{rng_for, sample, ClassSpec};
use turan_lab::levelsets::near_maximum_check;
use turan_lab::supnorm::sup_norm;
use turan_lab::{Complex, Interval, Polynomial};

fn disk_polynomial(seed: u64, max_degree: usize) -> Polynomial {
    disk_polynomial_radius(seed, max_degree, 2.0)
}

fn disk_polynomial_radius(seed: u64, max_degree: usize, radius: f64) -> Polynomial {
    let mut rng = rng_for(seed, 1);
    let n = rng.gen_range(1..=max_degree);
    let zeros = (0..n)
        .map(|_| Complex::from_polar(radius * rng.gen::<f64>().sqrt(), std::f64::consts::TAU * rng.gen::<f64>()))
        .collect();
    let lead = Complex::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
    Polynomial::from_zeros(lead, zeros).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn modulus_square_matches_evaluation(seed in any::<u64>(), x in -1.0f64..=1.0) {
        // Zeros out to radius 2 give coefficients near 1e9, and the expanded
        // form cannot then resolve an absolute 1e-9; the unit disk can.
        let p = disk_polynomial_radius(seed, 20, 1.0);
        let g = p.modulus_square_on_reals().unwrap();
        let direct = p.evaluate_real(x).norm_sqr();
        prop_assert!((g.eval(x) - direct).abs() <= 1e-9 * (1.0 + direct));
    }

    #[test]
    fn sup_norm_scales(seed in any::<u64>(), re in -3.0f64..3.0, im in -3.0f64..3.0) {
        prop_assume!(re.abs() + im.abs() > 1e-2);
        let p = disk_polynomial(seed, 20);
        let c = Complex::new(re, im);
        let a = sup_norm(&p, Interval::unit(), 1e-12).unwrap().value;
        let b = sup_norm(&p.scale(c), Interval::unit(), 1e-12).unwrap().value;
        prop_assert!((b - c.norm() * a).abs() <= 1e-12 * b.max(1e-300) * 10.0);
    }

    #[test]
    fn real_zeros_sit_between_turan_and_markov(seed in any::<u64>()) {
        let mut rng = rng_for(seed, 2);
        let n = rng.gen_range(1..=30);
        let zeros: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect();
        let p = Polynomial::from_real_zeros(&zeros);
        let r = turan_ratio(&p, Interval::unit()).unwrap().value;
        prop_assert!(r <= (n * n) as f64 * (1.0 + 1e-12));
        prop_assert!(r >= (n as f64).sqrt() / 6.0);
    }

    #[test]
    fn json_is_lossless(seed in any::<u64>()) {
        let p = disk_polynomial(seed, 30);
        let back = Polynomial::from_json_str(&p.to_json_string()).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.evaluate_real(0.3), p.evaluate_real(0.3));
    }

    #[test]
    fn stays_large_near_the_maximizer(seed in any::<u64>()) {
        let p = disk_polynomial(seed, 20);
        let rep = near_maximum_check(&p, 200).unwrap();
        prop_assert!(rep.satisfied, "{:?}", rep);
    }

    #[test]
    fn pinned_members_pass_their_verdicts(seed in any::<u64>()) {
        let mut rng = rng_for(seed, 3);
        let n = rng.gen_range(1..=30);
        let k = rng.gen_range(0..=n);
        let spec = ClassSpec::new(n, k, true).unwrap();
        let p = sample(&spec, seed).unwrap();
        let v = evaluate_verdict(&p, &spec).unwrap();
        prop_assert!(v.pass(), "{:?}", v.checks);
    }

    #[test]
    fn derivative_matches_logarithmic_sum(seed in any::<u64>(), x in -1.0f64..=1.0) {
        let p = disk_polynomial(seed, 20);
        let xc = Complex::new(x, 0.0);
        prop_assume!(p.zeros().iter().all(|z| (xc - z).norm() > 0.05));
        let analytic = p.evaluate(xc) * p.zeros().iter().map(|z| (xc - z).inv()).sum::<Complex>();
        let dp = p.derivative().unwrap();
        prop_assert_eq!(dp.degree(), p.degree() - 1);
        let got = dp.evaluate(xc);
        prop_assert!((got - analytic).norm() <= 1e-8 * analytic.norm(), "{} vs {}", got, analytic);
    }
}
