use catdpp::qpoly::QPolynomial;
use catdpp::trees::{path_children, path_parent};
use catdpp::{
    dpp_to_path, is_231_avoiding, path_to_dpp, perm_children, validate_path, CatalanDpp,
    Permutation,
};
use proptest::prelude::*;

/// Random valid DPP paths built by a biased walk that never dips below zero.
fn path_strategy() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(any::<bool>(), 0..24).prop_map(|coins| {
        let mut steps = Vec::new();
        let mut sum = 0i64;
        for up in coins {
            if up || sum == 0 {
                steps.push(1);
                sum += 1;
            } else {
                steps.push(-1);
                sum -= 1;
            }
        }
        if !steps.is_empty() && sum == 0 {
            steps.push(1);
        }
        steps
    })
}

fn order_for(steps: &[i64]) -> u32 {
    steps.iter().filter(|&&s| s == 1).count() as u32 + 1
}

proptest! {
    #[test]
    fn path_roundtrip(steps in path_strategy(), slack in 0u32..3) {
        let n = order_for(&steps) + slack;
        let p = validate_path(&steps, n).unwrap();
        let c = path_to_dpp(&p);
        prop_assert!(CatalanDpp::new(c.parts().to_vec(), n).is_ok());
        prop_assert_eq!(dpp_to_path(&c), p.clone());
        if let Some(first) = c.first() {
            prop_assert_eq!(p.ones() + 1, first as usize);
            prop_assert_eq!(p.minus_ones() + 1, c.parts().len());
        }
    }

    #[test]
    fn parent_regenerates_child(steps in path_strategy()) {
        let n = order_for(&steps);
        let p = validate_path(&steps, n).unwrap();
        if !p.is_empty() {
            let parent = path_parent(&p);
            let kids = path_children(&parent, true).unwrap();
            prop_assert!(kids.contains(&p));
        }
    }

    #[test]
    fn avoidance_is_preserved_by_west_insertion(seed in prop::collection::vec(0usize..16, 0..9)) {
        // grow a random 231-avoiding permutation by random children choices
        let mut p = Permutation::empty();
        for pick in seed {
            let kids = perm_children(&p).unwrap();
            p = kids[pick % kids.len()].clone();
            prop_assert!(is_231_avoiding(&p));
        }
    }

    #[test]
    fn polynomial_mul_div(a in prop::collection::vec(0u32..50, 1..8), b in prop::collection::vec(0u32..50, 1..6)) {
        let pa = QPolynomial::from_coeffs(a);
        let pb = QPolynomial::from_coeffs(b);
        prop_assume!(!pb.is_zero() && !pa.is_zero());
        let prod = pa.mul(&pb);
        prop_assert_eq!(prod.div_exact(&pb).unwrap(), pa.clone());
        prop_assert_eq!(prod.eval_at_one(), pa.eval_at_one() * pb.eval_at_one());
    }
}
