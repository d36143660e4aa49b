use affine_klr::*;

fn poly(coeffs: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(coeffs.iter().copied())
}

fn dim(m: &[i64], beta: &[i64], nu: &[usize]) -> LaurentPoly {
    let w = LevelKDominant::new(m.to_vec()).unwrap();
    let ch = Charges::of(&w);
    let beta = RootVector::new(beta.to_vec()).unwrap();
    graded_dim(&ch, &beta, nu, nu, GdimOptions::default()).unwrap()
}

#[test]
fn level_three_on_010() {
    for ell in 2..=5 {
        let mut m = vec![0; ell + 1];
        m[0] = 3;
        let mut beta = vec![0; ell + 1];
        beta[0] = 2;
        beta[1] += 1;
        assert_eq!(dim(&m, &beta, &[0, 1, 0]), poly(&[(0, 1), (2, 2), (4, 2), (6, 1)]), "ell = {ell}");
    }
}

#[test]
fn level_four_on_010() {
    assert_eq!(
        dim(&[4, 0, 0], &[2, 1, 0], &[0, 1, 0]),
        poly(&[(0, 1), (2, 2), (4, 3), (6, 3), (8, 2), (10, 1)])
    );
}

#[test]
fn level_three_on_010ell() {
    for ell in 3..=6 {
        let mut m = vec![0; ell + 1];
        m[0] = 3;
        let mut beta = vec![0; ell + 1];
        beta[0] = 2;
        beta[1] = 1;
        beta[ell] = 1;
        assert_eq!(dim(&m, &beta, &[0, 1, 0, ell]), poly(&[(0, 1), (2, 3), (4, 4), (6, 3), (8, 1)]), "ell = {ell}");
    }
}

#[test]
fn mixed_charges_on_0ell10() {
    for ell in 3..=6 {
        let mut m = vec![0; ell + 1];
        m[0] = 2;
        m[1] = 1;
        let mut beta = vec![0; ell + 1];
        beta[0] = 2;
        beta[1] = 1;
        beta[ell] = 1;
        assert_eq!(dim(&m, &beta, &[0, ell, 1, 0]), poly(&[(0, 1), (2, 3), (4, 3), (6, 1)]), "ell = {ell}");
    }
}

#[test]
fn two_charges_on_0h() {
    for ell in 3..=6 {
        for h in 2..ell {
            let mut m = vec![0; ell + 1];
            m[0] = 3;
            m[h] = 2;
            let mut beta = vec![0; ell + 1];
            beta[0] = 1;
            beta[h] = 1;
            assert_eq!(dim(&m, &beta, &[0, h]), poly(&[(0, 1), (2, 2), (4, 2), (6, 1)]), "ell = {ell}, h = {h}");
        }
    }
}

#[test]
fn sequences_outside_the_content_are_rejected() {
    let w = LevelKDominant::new(vec![2, 0, 0]).unwrap();
    let ch = Charges::of(&w);
    let beta = RootVector::new(vec![1, 0, 0]).unwrap();
    assert!(graded_dim(&ch, &beta, &[1], &[1], GdimOptions::default()).is_err());
    let beta = RootVector::new(vec![1, 1, 0]).unwrap();
    assert!(graded_dim(&ch, &beta, &[1, 0], &[1, 0], GdimOptions::default()).unwrap().is_zero());
}
