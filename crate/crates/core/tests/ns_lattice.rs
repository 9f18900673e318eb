use jonq_core::ns_lattice::*;

#[test]
fn pushforward_is_an_isometry_fixing_the_canonical_class() {
    for d in 2..=12 {
        let m = ns_pushforward(d).unwrap();
        assert_eq!(m.rank(), 2 * d as usize);
        assert!(m.preserves_form(), "d = {d}");
        assert!(m.fixes_canonical_class(), "d = {d}");
        assert_eq!(m.apply(&canonical_class(d)).unwrap(), canonical_class(d));
    }
}

#[test]
fn image_of_the_line_has_the_jonquieres_profile() {
    for d in 2..=12u32 {
        let m = ns_pushforward(d).unwrap();
        let mut line = vec![0; 2 * d as usize];
        line[0] = 1;
        let image = m.apply(&line).unwrap();
        assert_eq!(image[0], d as i64);
        let mults: Vec<i64> = image[1..].iter().map(|x| -x).collect();
        assert_eq!(mults, jonquieres_profile(d));
        assert_eq!(lorentzian_product(&image, &image).unwrap(), 1);
        let k = canonical_class(d);
        assert_eq!(lorentzian_product(&image, &k).unwrap(), -3);
    }
}

#[test]
fn jonquieres_profiles_are_homaloidal() {
    for d in 2..=64 {
        assert!(homaloidal_check(d, &jonquieres_profile(d)), "d = {d}");
    }
}

#[test]
fn non_homaloidal_types_are_rejected() {
    assert!(!homaloidal_check(3, &[2, 2, 2]));
    assert!(homaloidal_check(2, &[1, 1, 1]));
    assert!(homaloidal_check(5, &[2, 2, 2, 2, 2, 2]));
    assert!(homaloidal_check(4, &[2, 2, 2, 1, 1, 1]));
    assert!(!homaloidal_check(4, &[3, 3]));
    assert!(!homaloidal_check(4, &[1; 9]));
    assert!(ns_pushforward(1).is_err());
    assert!(lorentzian_product(&[1, 0], &[1]).is_err());
}
