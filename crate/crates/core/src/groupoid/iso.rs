use super::FiniteGroupoid;

/// Per-element data preserved by every isomorphism, used to prune the search.
fn signature(g: &FiniteGroupoid, x: usize) -> (bool, usize, usize, usize) {
    let n = g.len();
    let defined = (0..n).filter(|&y| g.mul(x, y).is_some()).count();
    let isotropy = g.isotropy(g.source(x)).len();
    let loop_order = if g.source(x) == g.range(x) {
        // Order of x in its isotropy group.
        let mut k = 1;
        let mut p = x;
        while p != g.source(x) {
            p = g.mul(p, x).expect("isotropy is closed");
            k += 1;
        }
        k
    } else {
        0
    };
    (g.is_unit(x), defined, isotropy, loop_order)
}

/// `f` is a bijection respecting definedness, products and inverses.
pub fn is_isomorphism(a: &FiniteGroupoid, b: &FiniteGroupoid, f: &[usize]) -> bool {
    let n = a.len();
    if b.len() != n || f.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &y in f {
        if y >= n || std::mem::replace(&mut seen[y], true) {
            return false;
        }
    }
    (0..n).all(|x| {
        b.inv(f[x]) == f[a.inv(x)]
            && (0..n).all(|y| a.mul(x, y).map(|z| f[z]) == b.mul(f[x], f[y]))
    })
}

/// Some isomorphism `a → b` as an image vector, found by backtracking.
pub fn find_isomorphism(a: &FiniteGroupoid, b: &FiniteGroupoid) -> Option<Vec<usize>> {
    let n = a.len();
    if b.len() != n {
        return None;
    }
    let sa: Vec<_> = (0..n).map(|x| signature(a, x)).collect();
    let sb: Vec<_> = (0..n).map(|x| signature(b, x)).collect();
    let mut ka = sa.clone();
    let mut kb = sb.clone();
    ka.sort();
    kb.sort();
    if ka != kb {
        return None;
    }
    let mut f = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if search(a, b, &sa, &sb, 0, &mut f, &mut used) {
        debug_assert!(is_isomorphism(a, b, &f));
        Some(f)
    } else {
        None
    }
}

fn consistent(a: &FiniteGroupoid, b: &FiniteGroupoid, f: &[usize], x: usize) -> bool {
    let fx = f[x];
    let mapped = |y: usize| f[y] != usize::MAX;
    let ix = a.inv(x);
    if mapped(ix) && f[ix] != b.inv(fx) {
        return false;
    }
    for y in (0..a.len()).filter(|&y| mapped(y)) {
        let fy = f[y];
        for (p, q, fp, fq) in [(x, y, fx, fy), (y, x, fy, fx)] {
            match (a.mul(p, q), b.mul(fp, fq)) {
                (None, None) => {}
                (Some(z), Some(w)) => {
                    if mapped(z) && f[z] != w {
                        return false;
                    }
                }
                _ => return false,
            }
        }
    }
    true
}

fn search(
    a: &FiniteGroupoid,
    b: &FiniteGroupoid,
    sa: &[(bool, usize, usize, usize)],
    sb: &[(bool, usize, usize, usize)],
    x: usize,
    f: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if x == a.len() {
        return is_isomorphism(a, b, f);
    }
    for y in 0..b.len() {
        if used[y] || sa[x] != sb[y] {
            continue;
        }
        f[x] = y;
        used[y] = true;
        if consistent(a, b, f, x) && search(a, b, sa, sb, x + 1, f, used) {
            return true;
        }
        used[y] = false;
        f[x] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_groupoids() {
        let p = FiniteGroupoid::pair(3);
        let f = find_isomorphism(&p, &p).unwrap();
        assert!(is_isomorphism(&p, &p, &f));
        assert!(find_isomorphism(&FiniteGroupoid::pair(2), &FiniteGroupoid::cyclic_group(4)).is_none());
        let two = FiniteGroupoid::cyclic_group(2).disjoint_union(&FiniteGroupoid::cyclic_group(2));
        assert!(find_isomorphism(&two, &FiniteGroupoid::pair(2)).is_none());
    }

    #[test]
    fn rejects_non_bijection() {
        let p = FiniteGroupoid::pair(2);
        assert!(!is_isomorphism(&p, &p, &[0, 0, 0, 0]));
        assert!(!is_isomorphism(&p, &p, &[0, 2, 1, 3]));
    }
}
