//! Independent recomputations of values the library derives by formula.

use ulrich_core::chi;
use ulrich_core::cohomology::{self, SplittingType};
use ulrich_core::BigUint;

/// Number of standard Young tableaux of an `rows × cols` rectangle by the
/// hook length formula.
fn hook_length_rectangle(rows: u64, cols: u64) -> BigUint {
    let cells = rows * cols;
    let mut num = BigUint::from(1u32);
    for k in 1..=cells {
        num *= k;
    }
    let mut den = BigUint::from(1u32);
    for i in 0..rows {
        for j in 0..cols {
            den *= (rows - i - 1) + (cols - j - 1) + 1;
        }
    }
    num / den
}

/// Standard Young tableaux of a rectangle, counted by filling cells one at a
/// time: a tableau is a lattice path in the space of row lengths.
fn count_tableaux(rows: usize, cols: usize) -> u64 {
    fn go(shape: &mut Vec<usize>, cols: usize, remaining: usize) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        for r in 0..shape.len() {
            let fits = shape[r] < cols && (r == 0 || shape[r - 1] > shape[r]);
            if fits {
                shape[r] += 1;
                total += go(shape, cols, remaining - 1);
                shape[r] -= 1;
            }
        }
        total
    }
    go(&mut vec![0; rows], cols, rows * cols)
}

#[test]
fn grassmannian_degree_matches_hook_length() {
    assert_eq!(chi::grassmannian_degree(2, 4).unwrap(), hook_length_rectangle(2, 2));
    assert_eq!(chi::grassmannian_degree(2, 4).unwrap(), BigUint::from(2u32));
    assert_eq!(chi::grassmannian_degree(2, 5).unwrap(), hook_length_rectangle(2, 3));
    assert_eq!(chi::grassmannian_degree(2, 5).unwrap(), BigUint::from(5u32));
    for n in 2..=9u64 {
        for m in 1..n {
            assert_eq!(
                chi::grassmannian_degree(m, n).unwrap(),
                hook_length_rectangle(m, n - m),
                "m={m} n={n}"
            );
        }
    }
}

#[test]
fn hook_length_matches_tableau_count() {
    for rows in 1..=3usize {
        for cols in 1..=4usize {
            assert_eq!(
                hook_length_rectangle(rows as u64, cols as u64),
                BigUint::from(count_tableaux(rows, cols)),
                "{rows}x{cols}"
            );
        }
    }
}

/// `h^0(O(a))` on `P^n` by counting monomials of degree `a` in `n + 1`
/// variables.
fn count_monomials(vars: u32, degree: i64) -> u64 {
    if degree < 0 {
        return 0;
    }
    if vars == 1 {
        return 1;
    }
    (0..=degree).map(|k| count_monomials(vars - 1, degree - k)).sum()
}

#[test]
fn h0_matches_monomial_count() {
    for n in 1..=4u32 {
        for a in -3..=7i64 {
            assert_eq!(
                cohomology::h_line_bundle(n, a, 0),
                BigUint::from(count_monomials(n + 1, a)),
                "n={n} a={a}"
            );
        }
    }
}

#[test]
fn ulrich_line_bundles_on_the_line_are_exactly_pd_minus_one() {
    for pd in 1..=6u64 {
        for a in -20..=20i64 {
            let t = SplittingType::new(1, [a]).unwrap();
            assert_eq!(cohomology::is_ulrich_split(&t, pd), a == pd as i64 - 1, "pd={pd} a={a}");
        }
    }
}

#[test]
fn ulrich_split_bundles_on_the_line_by_exhaustion() {
    // every Ulrich split bundle of rank <= 3 on (P^1, O(pd)) is O(pd-1)^r
    for pd in 1..=4i64 {
        for a in -6..=6i64 {
            for b in a..=6 {
                for c in b..=6 {
                    let t = SplittingType::new(1, [a, b, c]).unwrap();
                    let expected = a == pd - 1 && b == pd - 1 && c == pd - 1;
                    assert_eq!(cohomology::is_ulrich_split(&t, pd as u64), expected);
                }
            }
        }
    }
}

#[test]
fn no_ulrich_line_bundle_on_higher_veronese() {
    for n in 2..=4u32 {
        for pd in 2..=4u64 {
            for a in -20..=20i64 {
                let t = SplittingType::new(n, [a]).unwrap();
                assert!(!cohomology::is_ulrich_split(&t, pd), "n={n} pd={pd} a={a}");
            }
        }
        // O is Ulrich for O(1)
        assert!(cohomology::is_ulrich_split(&SplittingType::new(n, [0]).unwrap(), 1));
    }
}

#[test]
fn twist_formula_against_pascal_triangle() {
    let mut row = vec![BigUint::from(1u32)];
    let mut pascal = vec![row.clone()];
    for _ in 0..12 {
        let mut next = vec![BigUint::from(1u32)];
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigUint::from(1u32));
        pascal.push(next.clone());
        row = next;
    }
    for p in [2u64, 3, 5] {
        for t in 0..=6u64 {
            let binom = &pascal[(p + t - 1) as usize][(p - 1) as usize];
            let expected = BigUint::from(p).pow(p as u32 - 1) * binom * 3u32;
            assert_eq!(chi::chi_twist_formula(p, t, &BigUint::from(3u32)), expected);
        }
    }
}
