use modlog_core::blowup::{BlowupSpec, Classification};
use modlog_core::correspondence::{CorrLocalRecord, CurveCorr};
use modlog_core::divisor::Divisor;
use modlog_core::monomial::MonomialMap;
use modlog_core::pair::{twist, Pair, PairMap, Twist};
use modlog_core::qdivisor::{cube, cube_projection, QPair};
use modlog_core::Chart;
use proptest::prelude::*;

fn chart(prefix: &str, d: usize) -> Chart {
    Chart::new((0..d).map(|i| format!("{prefix}{i}"))).unwrap()
}

fn divisor(d: usize, max: u64) -> impl Strategy<Value = Divisor<u64>> {
    prop::collection::vec(0..=max, d).prop_map(Divisor::new)
}

fn matrix(rows: usize, cols: usize, max: u64) -> impl Strategy<Value = Vec<Vec<u64>>> {
    prop::collection::vec(prop::collection::vec(0..=max, cols), rows)
}

fn pair_map(max_dim: usize) -> impl Strategy<Value = PairMap<u64>> {
    (1..=max_dim, 1..=max_dim)
        .prop_flat_map(|(ds, dt)| (matrix(dt, ds, 5), divisor(ds, 10), divisor(dt, 10)))
        .prop_map(|(expo, x, y)| {
            let (s, t) = (chart("x", x.len()), chart("y", y.len()));
            let map = MonomialMap::new(s.clone(), t.clone(), expo).unwrap();
            PairMap::new(map, Pair::new(s, x).unwrap(), Pair::new(t, y).unwrap()).unwrap()
        })
}

/// f: A -> B and g: B -> C as pair maps.
fn composable() -> impl Strategy<Value = (PairMap<u64>, PairMap<u64>)> {
    (1..=3usize, 1..=3usize, 1..=3usize)
        .prop_flat_map(|(a, b, c)| {
            (
                matrix(b, a, 4),
                matrix(c, b, 4),
                divisor(a, 8),
                divisor(b, 8),
                divisor(c, 8),
            )
        })
        .prop_map(|(fe, ge, da, db, dc)| {
            let (ca, cb, cc) = (
                chart("a", da.len()),
                chart("b", db.len()),
                chart("c", dc.len()),
            );
            let pa = Pair::new(ca.clone(), da).unwrap();
            let pb = Pair::new(cb.clone(), db).unwrap();
            let pc = Pair::new(cc.clone(), dc).unwrap();
            let f = PairMap::new(
                MonomialMap::new(ca, cb.clone(), fe).unwrap(),
                pa,
                pb.clone(),
            )
            .unwrap();
            let g = PairMap::new(MonomialMap::new(cb, cc, ge).unwrap(), pb, pc).unwrap();
            (f, g)
        })
}

fn curve_corr() -> impl Strategy<Value = CurveCorr<u64>> {
    prop::collection::vec((0..=50u64, 0..=50u64, 1..=50u64, 1..=50u64), 0..=6).prop_map(|rs| {
        let records = rs
            .into_iter()
            .enumerate()
            .map(|(i, (nx, ny, ex, ey))| {
                CorrLocalRecord::new(format!("w{i}"), nx, ny, ex, ey).unwrap()
            })
            .collect();
        CurveCorr::non_constant(records).unwrap()
    })
}

fn qpair() -> impl Strategy<Value = QPair<u64>> {
    (1..=60u64, 0..=4usize)
        .prop_flat_map(|(level, d)| (Just(level), divisor(d, 60)))
        .prop_map(|(level, x)| {
            QPair::new(level, Pair::new(chart("q", x.len()), x).unwrap()).unwrap()
        })
}

proptest! {
    #[test]
    fn pullback_is_functorial((f, g) in composable()) {
        let gf = MonomialMap::compose(g.map(), f.map()).unwrap();
        let d = g.dst().divisor();
        let lhs = gf.pullback(d).unwrap();
        let rhs = f.map().pullback(&g.map().pullback(d).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn admissibility_threshold(f in pair_map(4)) {
        let t = f.minimal_twist().unwrap();
        for n in 1..=32u64 {
            let ok = f.with_src(twist(f.src(), &n).unwrap()).unwrap().is_admissible().unwrap();
            let expected = matches!(t, Twist::Finite(m) if n >= m);
            prop_assert_eq!(ok, expected, "n = {}", n);
        }
    }

    #[test]
    fn finiteness_is_the_support_criterion(f in pair_map(4)) {
        let pulled = f.pulled_back_modulus().unwrap();
        let supp = pulled.support_subset_of(f.src().divisor()).unwrap();
        prop_assert_eq!(f.minimal_twist().unwrap().is_finite(), supp);
        prop_assert_eq!(f.hom_log_exists().unwrap(), supp);
    }

    #[test]
    fn minimal_twist_is_submultiplicative((f, g) in composable()) {
        if let (Twist::Finite(a), Twist::Finite(b)) = (f.minimal_twist().unwrap(), g.minimal_twist().unwrap()) {
            let gf = f.then(&g).unwrap();
            match gf.minimal_twist().unwrap() {
                Twist::Finite(c) => prop_assert!(c <= a * b),
                Twist::Infeasible => prop_assert!(false, "composite infeasible"),
            }
        }
    }

    #[test]
    fn twisting_both_ends_preserves_admissibility(f in pair_map(3), n in 1..=9u64) {
        if f.is_admissible().unwrap() {
            prop_assert!(f.twisted(&n).unwrap().is_admissible().unwrap());
        }
    }

    #[test]
    fn twist_is_monoidal(x in divisor(3, 20), n in 1..=12u64, m in 1..=12u64) {
        let p = Pair::new(chart("x", 3), x).unwrap();
        prop_assert_eq!(twist(&p, &1).unwrap(), p.clone());
        prop_assert_eq!(twist(&twist(&p, &n).unwrap(), &m).unwrap(), twist(&p, &(n * m)).unwrap());
    }

    #[test]
    fn minimal_maps_are_admissible(f in pair_map(3)) {
        // Replace the source divisor by the exact pullback.
        let exact = f.with_src(Pair::new(f.src().chart().clone(), f.pulled_back_modulus().unwrap()).unwrap()).unwrap();
        prop_assert!(exact.is_minimal().unwrap());
        prop_assert!(exact.is_admissible().unwrap());
        prop_assert_eq!(exact.minimal_twist().unwrap(), Twist::Finite(1));
        if f.is_minimal().unwrap() {
            prop_assert!(f.is_admissible().unwrap());
        }
    }

    #[test]
    fn blowup_charts_are_pullbacks(
        e in prop::collection::vec(0..=6u64, 1..=5),
        mask in prop::collection::vec(any::<bool>(), 5),
    ) {
        let d = e.len();
        let center: Vec<usize> = (0..d).filter(|&i| mask[i]).collect();
        prop_assume!(!center.is_empty());
        let pair = Pair::new(chart("x", d), Divisor::new(e.clone())).unwrap();
        let spec = BlowupSpec::new(pair, center.clone()).unwrap();
        let verdict = spec.classify();
        if verdict == Classification::Modification {
            prop_assert!(spec.meets_boundary());
        }
        if verdict == Classification::Invalid {
            prop_assert!(spec.charts().is_err());
            return Ok(());
        }
        let sum: u64 = center.iter().map(|&b| e[b]).sum();
        let charts = spec.charts().unwrap();
        prop_assert_eq!(charts.len(), center.len());
        for c in charts {
            let pulled = c.chart_map().pullback(spec.pair().divisor()).unwrap();
            prop_assert_eq!(&pulled, c.total_transform());
            prop_assert_eq!(c.total_transform().mults()[c.index()], sum);
        }
    }

    #[test]
    fn correspondence_implications(c in curve_corr()) {
        let colim = c.in_colim_mcor();
        if c.in_lcor().unwrap() { prop_assert!(colim); }
        if c.in_mcor().unwrap() { prop_assert!(colim); }
        let t = c.minimal_twist().unwrap();
        prop_assert_eq!(t.is_finite(), colim);
        if let Twist::Finite(star) = t {
            for n in 1..=(star + 3) {
                let ok = c.twisted_source(&n).unwrap().in_mcor().unwrap();
                prop_assert_eq!(ok, n >= star);
            }
        }
    }

    #[test]
    fn qpair_laws(a in qpair(), m1 in 1..=7u64, m2 in 1..=7u64) {
        let na = a.normalize();
        prop_assert_eq!(na.normalize(), na.clone());
        prop_assert_eq!(na.rational_mults(), a.rational_mults());
        let t = a.transition(&m1).unwrap();
        prop_assert!(t.q_eq(&a).unwrap());
        prop_assert_eq!(t.normalize(), na);
        prop_assert_eq!(t.transition(&m2).unwrap(), a.transition(&(m1 * m2)).unwrap());
    }

    #[test]
    fn cube_twist_exchange(x in divisor(3, 9), n in 1..=9u64, m in 1..=9u64) {
        let p = Pair::new(chart("x", 3), x).unwrap();
        prop_assert_eq!(
            twist(&cube(&p, &n).unwrap(), &m).unwrap(),
            cube(&twist(&p, &m).unwrap(), &(n * m)).unwrap()
        );
        let proj = cube_projection(&p, &n).unwrap();
        prop_assert!(proj.is_admissible().unwrap());
        prop_assert_eq!(proj.pulled_back_modulus().unwrap().without(3), p.divisor().clone());
    }
}
