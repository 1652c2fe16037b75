use klhodge::counts::KlFamily;
use klhodge::counts::{binomial, d_count, q_coeffs, MultiIndex};
use klhodge::hodge::{dims_kl, hodge_v21, mixed_hodge_kl3, mixed_hodge_tilde_kl3};
use klhodge::sympower::{
    apply_tilde_theta, build_chain, eigen_rhs, f_vector, jordan_blocks, kernel_slice_dims, w_basis, w_mid_basis,
    ChainFamily,
};
use klhodge::weyl::{v21_chain, v21_jordan_blocks, young_projector};
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn q_multiset(n: u32, k: u32) -> Vec<usize> {
    let q = q_coeffs(n, k).unwrap();
    let mut out = Vec::new();
    for d in 0..=(n * k / 2) {
        for _ in 0..q[d as usize].to_usize().unwrap() {
            out.push((n * k - 2 * d + 1) as usize);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

#[test]
fn v21_data() {
    assert_eq!(young_projector().unwrap().dim, 15);
    assert_eq!(v21_jordan_blocks().unwrap(), vec![7, 5, 3]);
    let chain = v21_chain(None).unwrap();
    let w = w_basis(&chain).cardinalities();
    assert_eq!(&w[1..=5], &[1, 1, 1, 1, 1]);
    assert_eq!(w[0] + w[6..].iter().sum::<usize>(), 0);
    let mid = w_mid_basis(&chain).unwrap().cardinalities();
    let at: Vec<usize> = mid.iter().enumerate().filter(|(_, &c)| c > 0).map(|(d, _)| d).collect();
    assert_eq!(at, vec![4, 5]);
    let h = hodge_v21().unwrap();
    assert_eq!(h.support().len(), 2);
    assert_eq!((h.get_int(4, 5), h.get_int(5, 4)), (1, 1));
}

#[test]
fn tilde_eigenstructure() {
    for n in 1..=3u32 {
        for k in 1..=6u32 {
            for i in MultiIndex::all(n as usize + 1, k) {
                let f = f_vector(n, &i);
                assert_eq!(apply_tilde_theta(&f), eigen_rhs(n, &i, &f), "n={n} k={k} I={i:?}");
            }
            let chain = build_chain(ChainFamily::KlTildeT, n, k, None).unwrap();
            let dk = d_count(n + 1, k);
            let dims = kernel_slice_dims(&chain);
            let nk = (n * k) as usize;
            assert!(dims[nk..].iter().all(|&x| x == dk), "n={n} k={k}");
            assert!(dims.windows(2).all(|w| w[0] <= w[1]), "n={n} k={k}");
            if n <= 2 {
                assert!(dims[..nk].iter().all(|&x| x == 0), "n={n} k={k}");
            }
        }
    }
}

#[test]
fn tilde_kernel_starts_early_for_rank_four() {
    // f_0 f_2 + f_1 f_3 is divisible by t^2, so a kernel vector lives in degree 4.
    let chain = build_chain(ChainFamily::KlTildeT, 3, 2, None).unwrap();
    assert_eq!(kernel_slice_dims(&chain)[..8].to_vec(), vec![0, 0, 0, 0, 1, 1, 2, 2]);
}

#[test]
fn mixed_table_sums() {
    for k in 1..=12u32 {
        let t = mixed_hodge_tilde_kl3(k).unwrap();
        let dk = d_count(3, k) as u64;
        assert_eq!(t.total(), binomial(u64::from(k + 2), 2) as u64 - dk, "k={k}");
        assert_eq!(t.off_weight().values().sum::<u64>(), 1 + u64::from(k / 2) + dk, "k={k}");
    }
    for k in [3, 6, 9, 12] {
        let m = mixed_hodge_kl3(k).unwrap();
        assert_eq!(m.total(), dims_kl(2, k, KlFamily::Kl).unwrap().dim_h1);
        assert_eq!(
            m.off_weight().values().sum::<u64>(),
            1 + u64::from(k / 2) + d_count(3, k) as u64
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn jordan_blocks_follow_q(n in 1u32..=3, k in 1u32..=8) {
        prop_assert_eq!(jordan_blocks(n, k), q_multiset(n, k));
    }

    #[test]
    fn jordan_blocks_fill_the_fiber(n in 1u32..=3, k in 1u32..=8) {
        let total: usize = jordan_blocks(n, k).iter().sum();
        prop_assert_eq!(total as u128, binomial(u64::from(n + k), u64::from(n)));
    }
}
