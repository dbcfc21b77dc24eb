mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn hom_into_injectives_and_from_projectives(rationals in any::<bool>(), seed in module_case(true)) {
        let case = ModuleCase { rationals, ..seed };
        prop_assert!(check_hom_identities(&case).is_ok(), "{:?}", check_hom_identities(&case));
    }

    #[test]
    fn duality_preserves_hom_dimensions(rationals in any::<bool>(), x in module_case(true), y in module_case(true)) {
        let case = ModuleCase { rationals, ..x };
        let r = check_duality(&case, &y);
        prop_assert!(r.is_ok(), "{:?}", r);
    }

    #[test]
    fn minimal_resolutions_are_exact(rationals in any::<bool>(), seed in module_case(true)) {
        let case = ModuleCase { rationals, ..seed };
        let r = check_resolution(&case);
        prop_assert!(r.is_ok(), "{:?}", r);
    }

    #[test]
    fn decomposition_reassembles(rationals in any::<bool>(), seed in module_case(true)) {
        let case = ModuleCase { rationals, ..seed };
        let r = check_decomposition(&case);
        prop_assert!(r.is_ok(), "{:?}", r);
    }

    #[test]
    fn rank_nullity_over_q(m in matrix_case(true)) {
        let r = check_rank_nullity(&m);
        prop_assert!(r.is_ok(), "{:?}", r);
    }

    #[test]
    fn rank_nullity_over_f5(m in matrix_case(false)) {
        let r = check_rank_nullity(&m);
        prop_assert!(r.is_ok(), "{:?}", r);
    }
}
