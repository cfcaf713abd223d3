//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the table is always printed.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use num_integer::Integer;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use rslab_core::arith::{int, ratio, to_i64};
use rslab_core::charclass::{
    chern_to_power_sums, euler_characteristic, eval_polynomial, genus_number, hodge_from_chi_y, power_sums_to_chern,
    product_rs_index, rs_index, signature, verify_dimension_identities, GenusKind,
};
use rslab_core::ci::{
    build_ci, ci_invariants, ci_rs_kernel, cy_kernel_and_index, fermat_signature, hodge_numbers, quadric, CiManifold,
    CiSpec,
};
use rslab_core::holonomy::{
    describe_by_dimension, parallel_rs_dimension, qk_kernel_analysis, sigma_three_half, sphere_check,
    symmetric_space_catalog, HolonomyGroup, HolonomyModel, QkSummand, Spinors,
};
use rslab_core::lie::{
    character_moments, check_tensor_moments, generic_point, product_moments, tensor_decompose, RepSum, RootSystem,
};
use rslab_core::BigRational;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ci(n: u32, degrees: &[u32]) -> CiManifold {
    build_ci(CiSpec::new(n, degrees).unwrap()).unwrap()
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn signatures() -> Check {
    for (n, d, s) in [(4, 4, 100), (6, 4, -576), (6, 6, -12544), (4, 8, 4040), (6, 10, -505088)] {
        let got = signature(&ci(n, &[d]).profile);
        ensure(got == int(s), || format!("σ(X_{n}({d})) = {got}, expected {s}"))?;
    }
    Ok(())
}

fn fermat_oracle() -> Check {
    for m in 2..=8 {
        for d in 2..=10 {
            let series = fermat_signature(m, d).map_err(e)?;
            let lgenus = signature(&ci(m, &[d]).profile);
            ensure(series == lgenus, || format!("X_{m}({d}): series {series}, L-genus {lgenus}"))?;
        }
    }
    Ok(())
}

fn ahat_values() -> Check {
    for (n, d, a) in [(2, 6, 8), (4, 8, 12), (6, 10, 16)] {
        let got = ci_invariants(&ci(n, &[d])).ahat;
        ensure(got == int(a), || format!("Â(X_{n}({d})) = {got}, expected {a}"))?;
    }
    let psc = [ci(4, &[4]), ci(6, &[4]), ci(6, &[6]), quadric(4).unwrap()];
    for m in &psc {
        ensure(m.spin, || format!("{} should be spin", m.spec))?;
        let got = ci_invariants(m).ahat;
        ensure(got.is_zero(), || format!("Â({}) = {got}, expected 0", m.spec))?;
    }
    Ok(())
}

fn index_values() -> Check {
    let q4 = ci_invariants(&quadric(4).unwrap());
    ensure(q4.ind_q == int(-2), || format!("ind Q(Q4) = {}", q4.ind_q))?;
    ensure(Some(-&q4.ind_q) == q4.signature, || format!("ind Q(Q4) = {} but σ = {:?}", q4.ind_q, q4.signature))?;

    let k3 = ci(2, &[4]);
    let direct = rs_index(&k3.profile).ind_q;
    let ahat = rs_index(&k3.profile).ind_d;
    let sigma = signature(&k3.profile);
    let ids = verify_dimension_identities(4).map_err(e)?;
    ensure(ids.all_hold(), || "dimension-4 coefficient relations fail".into())?;
    let via_ahat = int(-19) * &ahat;
    let via_sigma = ratio(19, 8) * &sigma;
    let h = hodge_numbers(&k3).map_err(e)?;
    let (_, via_hodge) = cy_kernel_and_index(&h).map_err(e)?;
    let routes = [direct.clone(), via_ahat, via_sigma, int(via_hodge)];
    ensure(routes.iter().all(|r| *r == int(-38)), || format!("K3 routes disagree: {routes:?}"))
}

fn coefficient_identities() -> Check {
    let expect: [(u32, &[&[i64]]); 3] =
        [(4, &[&[-19, 1], &[19, 8]]), (8, &[&[25, 1, -1, 1], &[9, 1, -1, 3], &[-48, 1, 3, 1]]), (12, &[&[5, 1, 1, 8]])];
    for (dim, rels) in expect {
        let ids = verify_dimension_identities(dim).map_err(e)?;
        ensure(ids.relations.len() == rels.len(), || format!("dimension {dim}: {} relations", ids.relations.len()))?;
        for (rel, want) in ids.relations.iter().zip(rels) {
            let want: Vec<BigRational> = want.chunks(2).map(|p| ratio(p[0], p[1])).collect();
            ensure(rel.expected == want, || format!("dimension {dim}: tabulated {:?}", rel.expected))?;
            ensure(rel.holds(), || {
                format!("dimension {dim}: {} vs {:?} leaves residual {:?}", rel.target, rel.terms, rel.residual)
            })?;
            if dim != 12 {
                ensure(rel.unique_solution() == Some(&want[..]), || {
                    format!("dimension {dim}: {} has solution {:?}", rel.target, rel.solution)
                })?;
            }
        }
    }
    // dimension 12: both sides on each of the three Pontryagin monomials
    let ids = verify_dimension_identities(12).map_err(e)?;
    ensure(ids.basis.len() == 3, || format!("basis {:?}", ids.basis))?;
    let f = |name: &str| ids.functional(name).unwrap().coefficients.clone();
    let (q, a, s) = (f("ind_q"), f("ahat"), f("sigma"));
    for i in 0..3 {
        let rhs = int(5) * &a[i] + ratio(1, 8) * &s[i];
        ensure(q[i] == rhs, || format!("dimension 12 monomial {:?}: {} vs {rhs}", ids.basis[i], q[i]))?;
    }
    Ok(())
}

fn hodge() -> Check {
    let cases: [(u32, u32, u32, u32, i64); 5] =
        [(3, 5, 1, 2, 101), (3, 5, 1, 1, 1), (4, 6, 1, 3, 426), (4, 6, 1, 1, 1), (2, 4, 1, 1, 20)];
    for (n, d, p, q, v) in cases {
        let h = hodge_numbers(&ci(n, &[d])).map_err(e)?;
        ensure(h.get(p, q) == v, || format!("h^{{{p},{q}}}(X_{n}({d})) = {}, expected {v}", h.get(p, q)))?;
    }
    for (n, d) in [(2, 4), (3, 5), (4, 6), (3, 3), (5, 2), (4, 3)] {
        let h = hodge_numbers(&ci(n, &[d])).map_err(e)?;
        for p in 0..=n {
            for q in 0..=n {
                if p + q != n {
                    let want = i64::from(p == q);
                    ensure(h.get(p, q) == want, || format!("X_{n}({d}): h^{{{p},{q}}} = {}", h.get(p, q)))?;
                }
            }
        }
    }
    Ok(())
}

fn kernels() -> Check {
    for (n, d, k) in [(2, 4, 38), (3, 5, 202), (4, 6, 852)] {
        let r = ci_rs_kernel(&ci(n, &[d])).map_err(e)?;
        ensure(r.dim_ker_q == Some(k), || format!("dim ker Q(X_{n}({d})) = {:?}, expected {k}", r.dim_ker_q))?;
    }
    Ok(())
}

fn all_models() -> Vec<HolonomyGroup> {
    let mut g = vec![HolonomyGroup::G2, HolonomyGroup::Spin7, HolonomyGroup::Su3Symmetric];
    g.extend((2..=8).map(HolonomyGroup::SU));
    g.extend((1..=6).map(HolonomyGroup::Sp));
    g.extend((2..=4).map(HolonomyGroup::SpSp));
    g.extend((3..=10).map(HolonomyGroup::SO));
    g.extend((2..=4).map(HolonomyGroup::U));
    g
}

fn decompositions() -> Check {
    let g2 = HolonomyModel::new(HolonomyGroup::G2).map_err(e)?;
    let s = sigma_three_half(&g2).map_err(e)?;
    let d = describe_by_dimension(&g2.root_system, &s.total).map_err(e)?;
    ensure(d == "7 + 14 + 27", || format!("G2: {d}"))?;

    let spin7 = HolonomyModel::new(HolonomyGroup::Spin7).map_err(e)?;
    let s = sigma_three_half(&spin7).map_err(e)?;
    let rs = &spin7.root_system;
    let plus = describe_by_dimension(rs, s.plus.as_ref().unwrap()).map_err(e)?;
    let minus = describe_by_dimension(rs, s.minus.as_ref().unwrap()).map_err(e)?;
    ensure(plus == "8 + 48" && minus == "21 + 35", || format!("Spin(7): {plus} / {minus}"))?;

    for g in all_models() {
        let h = HolonomyModel::new(g).map_err(e)?;
        let rs = &h.root_system;
        let half = h.sigma_half.total().dimension(rs).map_err(e)?;
        let t = h.tangent.dimension(rs).map_err(e)?;
        let s = sigma_three_half(&h).map_err(e)?;
        let got = s.total.dimension(rs).map_err(e)?;
        ensure(got == half * t - half, || format!("{g}: dim Σ_3/2 = {got}, expected {half}·{t} − {half}"))?;
    }
    Ok(())
}

fn parallel_counts() -> Check {
    let count = |g| parallel_rs_dimension(&HolonomyModel::new(g).map_err(e)?).map_err(e);
    for n in 2..=6 {
        let c = count(HolonomyGroup::Sp(n))?;
        ensure(c == n as i64 - 1, || format!("Sp({n}): {c}"))?;
    }
    for n in 2..=8 {
        let c = count(HolonomyGroup::SU(n))?;
        ensure(c == 0, || format!("SU({n}): {c}"))?;
    }
    for (g, want) in [(HolonomyGroup::G2, 0), (HolonomyGroup::Spin7, 0), (HolonomyGroup::SpSp(2), 1)] {
        let c = count(g)?;
        ensure(c == want, || format!("{g}: {c}, expected {want}"))?;
    }
    Ok(())
}

fn quaternion_kahler() -> Check {
    let r = qk_kernel_analysis(2).map_err(e)?;
    let got: BTreeSet<QkSummand> = r.kernel_summands.iter().map(|k| k.summand).collect();
    let trivial = QkSummand { d: 0, a: 0, b: 0 };
    let sym2e = QkSummand { d: 0, a: 1, b: 1 };
    ensure(got == BTreeSet::from([trivial, sym2e]), || format!("m = 2 kernel summands {got:?}"))?;
    // Sym²E has highest weight 2ω_1 of C_2
    let w = sym2e.weight(2).map_err(e)?;
    ensure(w.labels() == [0, 2, 0], || format!("Sym²E weight {w}"))?;
    for m in 3..=6 {
        let r = qk_kernel_analysis(m).map_err(e)?;
        ensure(r.kernel_summands.is_empty(), || format!("m = {m} has kernel summands"))?;
    }
    let cat = symmetric_space_catalog().map_err(e)?;
    let dims: Vec<(&str, i64)> = cat.iter().take(3).map(|s| (s.name, s.kernel_dimension)).collect();
    ensure(dims == [("Gr2(C4)", 2), ("HP2", 1), ("G2/SO(4)", 1)], || format!("catalog {dims:?}"))
}

fn sphere() -> Check {
    for n in 3..=20u32 {
        let c = sphere_check(n).map_err(e)?;
        let n_i = n as i64;
        ensure(c.casimir == ratio(n_i * (n_i + 7), 8), || format!("S^{n}: {}", c.casimir))?;
        let kind = if n % 2 == 1 { 'B' } else { 'D' };
        ensure(c.realization.starts_with(kind), || format!("S^{n} realized as {}", c.realization))?;
    }
    for n in 3..=100u32 {
        let c = sphere_check(n).map_err(e)?;
        let n_i = n as i64;
        ensure(c.margin == ratio(n_i * n_i - n_i + 4, 4) && c.margin > BigRational::zero(), || {
            format!("S^{n}: margin {}", c.margin)
        })?;
    }
    Ok(())
}

fn product_formula() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_2024);
    for _ in 0..10 {
        let mut pick = || {
            let n = rng.gen_range(1..=3u32);
            let r = rng.gen_range(1..=2usize);
            let degrees: Vec<u32> = (0..r).map(|_| rng.gen_range(2..=5)).collect();
            ci(n, &degrees)
        };
        let (a, b) = (pick(), pick());
        let p = product_rs_index(&a.profile, &b.profile).map_err(|err| format!("{} × {}: {err}", a.spec, b.spec))?;
        ensure(p.combination == p.direct, || format!("{} × {}", a.spec, b.spec))?;
    }
    let k3 = ci(2, &[4]);
    let p = product_rs_index(&k3.profile, &k3.profile).map_err(e)?;
    ensure(p.combination == int(-156) && p.direct == int(-156), || format!("K3 × K3: {p:?}"))
}

fn moments_agree(rs: &RootSystem, a: &RepSum, t: &RepSum, minus: &RepSum, result: &RepSum) -> Check {
    let pt = generic_point(rs.rank());
    let ma = character_moments(rs, a, &pt).map_err(e)?;
    let mt = character_moments(rs, t, &pt).map_err(e)?;
    let mm = character_moments(rs, minus, &pt).map_err(e)?;
    let mr = character_moments(rs, result, &pt).map_err(e)?;
    let lhs: Vec<BigRational> = product_moments(&ma, &mt).iter().zip(&mm).map(|(x, y)| x - y).collect();
    ensure(lhs == mr, || "moments of Σ_3/2 disagree".into())?;
    for (lambda, _) in a.terms() {
        for (mu, _) in t.terms() {
            let s = tensor_decompose(rs, lambda, mu).map_err(e)?;
            check_tensor_moments(rs, lambda, mu, &s, &pt).map_err(e)?;
        }
    }
    Ok(())
}

fn property_suites() -> Check {
    let sample = [
        (1, vec![3]),
        (2, vec![4]),
        (2, vec![2, 3]),
        (3, vec![5]),
        (3, vec![2, 2]),
        (4, vec![2]),
        (4, vec![3, 3]),
        (5, vec![4]),
    ];
    for (n, d) in &sample {
        let m = ci(*n, d);
        let p = &m.profile;
        let chi = hodge_from_chi_y(p);
        let at = |y: i64| eval_polynomial(&chi, &int(y));
        ensure(at(-1) == euler_characteristic(p), || format!("{}: χ_y(-1) = {}", m.spec, at(-1)))?;
        let todd = genus_number(GenusKind::Todd, p).map_err(e)?;
        ensure(at(0) == todd, || format!("{}: χ_y(0) = {} but Todd = {todd}", m.spec, at(0)))?;
        ensure(at(1) == signature(p), || format!("{}: χ_y(1) = {}", m.spec, at(1)))?;

        let back = power_sums_to_chern(&chern_to_power_sums(p));
        for k in 1..=*n {
            ensure(back[k as usize - 1] == p.chern_class(k), || {
                format!("{}: Newton round trip fails at c_{k}", m.spec)
            })?;
        }
    }

    for g in all_models() {
        let h = HolonomyModel::new(g).map_err(e)?;
        let rs = &h.root_system;
        let s = sigma_three_half(&h).map_err(e)?;
        match &h.sigma_half {
            Spinors::Graded { plus, minus } => {
                moments_agree(rs, plus, &h.tangent, minus, s.plus.as_ref().unwrap())
                    .map_err(|x| format!("{g}: {x}"))?;
                moments_agree(rs, minus, &h.tangent, plus, s.minus.as_ref().unwrap())
                    .map_err(|x| format!("{g}: {x}"))?;
            }
            Spinors::Ungraded(half) => {
                moments_agree(rs, half, &h.tangent, half, &s.total).map_err(|x| format!("{g}: {x}"))?;
            }
        }
    }

    let mut checked = 0;
    for n in [2u32, 6] {
        for degrees in
            [vec![2], vec![4], vec![6], vec![2, 2], vec![2, 4], vec![3, 3], vec![3, 5], vec![4, 4], vec![2, 2, 2]]
        {
            let m = ci(n, &degrees);
            if !m.spin {
                continue;
            }
            checked += 1;
            let inv = ci_invariants(&m);
            let sigma = to_i64(inv.signature.as_ref().unwrap()).ok_or_else(|| format!("{}: σ not integral", m.spec))?;
            ensure(sigma.is_multiple_of(&16), || format!("{}: σ = {sigma}", m.spec))?;
            for (name, v) in [("Â", &inv.ahat), ("ind Q", &inv.ind_q)] {
                let v = to_i64(v).ok_or_else(|| format!("{}: {name} not integral", m.spec))?;
                ensure(v.is_even(), || format!("{}: {name} = {v} is odd", m.spec))?;
            }
        }
    }
    ensure(checked >= 6, || format!("only {checked} spin examples"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("signatures via the L-genus", signatures),
        ("Fermat series vs L-genus signature, 2 <= m <= 8, 2 <= d <= 10", fermat_oracle),
        ("A-hat genus values", ahat_values),
        ("ind Q of Q4 and of K3 by three routes", index_values),
        ("coefficient identities in dimensions 4, 8, 12", coefficient_identities),
        ("Hodge numbers", hodge),
        ("Calabi-Yau kernel dimensions", kernels),
        ("spin-3/2 decompositions and dimension bookkeeping", decompositions),
        ("parallel spin-3/2 field counts", parallel_counts),
        ("quaternion-Kaehler kernel analysis and catalog", quaternion_kahler),
        ("sphere Casimir and positivity margin", sphere),
        ("product index formula", product_formula),
        ("chi_y, Klimyk vs moments, Newton, divisibility", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("PASS  {:>2}. {name} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}. {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
