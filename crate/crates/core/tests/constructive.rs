use rand::rngs::StdRng;
use rand::seq::IteratorRandom;
use rand::SeedableRng;
use throttle_core::constructive::{construct_pd_certificate, construct_pd_certificate_with, BoundTheorem};
use throttle_core::enumerate::graphs_in_range;
use throttle_core::families::{complete, ex11_57};
use throttle_core::throttling::throttle;
use throttle_core::RuleKind;

const BOTH: [BoundTheorem; 2] = [BoundTheorem::ProductSixSevenths, BoundTheorem::SumThirdPlusTwo];

#[test]
fn certificates_bound_the_exhaustive_value() {
    for g in graphs_in_range(3, 7, true).unwrap() {
        let n = g.order();
        for t in BOTH {
            let c = construct_pd_certificate(&g, t).unwrap();
            c.verify(&g).unwrap();
            assert!(c.pt <= 2 && c.within_bound());
            let exact = throttle(RuleKind::PowerDomination, t.kind(), &g).unwrap().value;
            assert!(exact <= c.value);
            if !c.removed.is_empty() {
                assert!(2 * c.power_dominating_set.len() <= n - c.dominating.dominating_set.len());
            }
        }
    }
}

#[test]
fn random_private_neighbour_choices_also_work() {
    let mut rng = StdRng::seed_from_u64(7);
    for g in graphs_in_range(3, 7, true).unwrap() {
        for t in BOTH {
            for _ in 0..20 {
                let c = construct_pd_certificate_with(&g, t, |_, s| s.iter().choose(&mut rng).unwrap()).unwrap();
                c.verify(&g).unwrap();
            }
        }
    }
}

#[test]
fn sum_bound_is_attained() {
    let f = ex11_57(&complete(2).unwrap()).unwrap();
    assert_eq!(f.graph.order(), 7);
    let c = construct_pd_certificate(&f.graph, BoundTheorem::SumThirdPlusTwo).unwrap();
    assert!(c.value <= 4);
    assert_eq!(throttle(RuleKind::PowerDomination, BoundTheorem::SumThirdPlusTwo.kind(), &f.graph).unwrap().value, 4);
}

#[test]
fn certificate_serialises_every_field() {
    let c = construct_pd_certificate(&complete(4).unwrap(), BoundTheorem::ProductSixSevenths).unwrap();
    let json = serde_json::to_value(&c).unwrap();
    for key in ["theorem", "dominating", "epn_choices", "removed", "power_dominating_set", "pt", "value"] {
        assert!(json.get(key).is_some(), "{key}");
    }
    assert_eq!(json["theorem"], "ThX_6n7");
    assert_eq!(json["value"], 2);
}
