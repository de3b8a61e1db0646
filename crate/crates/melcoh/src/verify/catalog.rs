//! The claim catalog: each entry names one checkable fact, the procedure
//! that computes it, and the exact expected value.

use std::time::Instant;

use gfp_linalg::{rank, rank_delta, rank_nullspace, solve, SparseMatrix, SparseVec, F5};
use serde_json::{json, Map, Value};

use crate::cohomology::{
    action_matrix, cohomology_dim, differential, h_total, invariant_cohomology, CochainBlock,
    Coefficients, Complex, Domain, RelativeComplex,
};
use crate::exec::{map_collect, Exec};
use crate::melikian::{Melikian, Sector, DIM};
use crate::squaring::{
    canonical_derivations, certify_classes, degree_homogeneous, nilpotence_consistent, sq,
    sq_coordinates, sq_projected_coords,
};
use crate::subspace::{centralizer, graded_ids, graded_part, span_bracket, DegreePred, Subspace};
use crate::verify::report::{ClaimReport, Status};
use crate::{Error, Result};

type ClaimFn = fn(&Melikian, Exec) -> Result<(Value, Value, String)>;

pub struct ClaimDef {
    pub id: &'static str,
    pub tag: &'static str,
    pub paper_ref: &'static str,
    run: ClaimFn,
}

pub fn catalog() -> &'static [ClaimDef] {
    &CATALOG
}

pub fn claim_ids() -> Vec<&'static str> {
    CATALOG.iter().map(|c| c.id).collect()
}

pub fn tags() -> Vec<&'static str> {
    let mut t: Vec<&'static str> = CATALOG.iter().map(|c| c.tag).collect();
    t.dedup();
    t
}

/// Run one claim on a built algebra. Unknown ids are usage errors.
pub fn run_claim(alg: &Melikian, id: &str, exec: Exec) -> Result<ClaimReport> {
    let def = CATALOG
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::Usage(format!("unknown claim id {id:?}")))?;
    Ok(run_def(alg, def, exec))
}

/// Run the whole catalog (or one tag) in catalog order on one algebra.
pub fn run_all(alg: &Melikian, tag: Option<&str>, exec: Exec) -> Result<Vec<ClaimReport>> {
    if let Some(t) = tag {
        if !CATALOG.iter().any(|c| c.tag == t) {
            return Err(Error::Usage(format!("unknown tag {t:?}")));
        }
    }
    Ok(CATALOG
        .iter()
        .filter(|c| tag.is_none_or(|t| c.tag == t))
        .map(|def| run_def(alg, def, exec))
        .collect())
}

fn run_def(alg: &Melikian, def: &ClaimDef, exec: Exec) -> ClaimReport {
    let start = Instant::now();
    let (status, expected, computed, notes) = match (def.run)(alg, exec) {
        Ok((expected, computed, notes)) => {
            let status = if expected == computed { Status::Pass } else { Status::Fail };
            (status, expected, computed, notes)
        }
        Err(e) => (Status::Fail, Value::Null, json!({ "error": e.to_string() }), String::new()),
    };
    ClaimReport {
        id: def.id.to_string(),
        status,
        expected,
        computed,
        paper_ref: def.paper_ref.to_string(),
        elapsed_ms: start.elapsed().as_millis() as u64,
        notes,
    }
}

/// Fail-fast structural check for fault injection: dimensions, grading
/// additivity, antisymmetry of the bilinear bracket, Jacobi.
pub fn structure_suite_ok(alg: &Melikian) -> bool {
    if alg.dim() != DIM {
        return false;
    }
    for i in 0..DIM as u16 {
        for j in (i + 1)..DIM as u16 {
            for &(k, _) in alg.table_entry(i, j).iter() {
                if alg.degree(k) != alg.degree(i) + alg.degree(j)
                    || alg.weight(k).0 != (alg.weight(i).0 + alg.weight(j).0) % 5
                    || alg.weight(k).1 != (alg.weight(i).1 + alg.weight(j).1) % 5
                    || alg.z3(k) != (alg.z3(i) + alg.z3(j)) % 3
                {
                    return false;
                }
            }
        }
    }
    jacobi_violations(alg, Exec::Sequential, true) == 0
}

// ---------------------------------------------------------------------
// helpers

fn dom<'a>(alg: &'a Melikian, pred: DegreePred, label: &str) -> Result<Domain<'a>> {
    Domain::graded(alg, pred, label)
}

fn m0_actors(alg: &Melikian) -> Vec<u16> {
    graded_ids(alg, DegreePred::Eq(0))
}

fn json_by_degree(pairs: &[(i32, usize)]) -> Value {
    let mut m = Map::new();
    for &(d, v) in pairs {
        m.insert(d.to_string(), json!(v));
    }
    Value::Object(m)
}

fn h_by_degree(rep: &crate::cohomology::CohomologyReport) -> Vec<(i32, usize)> {
    let mut out = std::collections::BTreeMap::new();
    for e in &rep.entries {
        if e.h > 0 {
            *out.entry(e.degree).or_insert(0) += e.h;
        }
    }
    out.into_iter().collect()
}

fn jacobi_violations(alg: &Melikian, exec: Exec, fail_fast: bool) -> usize {
    let firsts: Vec<u16> = (0..DIM as u16 - 2).collect();
    let counts = map_collect(exec, firsts, |i| {
        let mut acc = [F5::ZERO; DIM];
        let mut touched: Vec<u16> = Vec::with_capacity(16);
        let mut violations = 0usize;
        for j in (i + 1)..DIM as u16 - 1 {
            for k in (j + 1)..DIM as u16 {
                for &(a, b, c) in &[(i, j, k), (j, k, i), (k, i, j)] {
                    for &(t, ct) in alg.bracket_ids(a, b).iter() {
                        for &(u, cu) in alg.bracket_ids(t, c).iter() {
                            if acc[u as usize].is_zero() {
                                touched.push(u);
                            }
                            acc[u as usize] += ct * cu;
                        }
                    }
                }
                let mut bad = false;
                for &u in &touched {
                    if !acc[u as usize].is_zero() {
                        bad = true;
                    }
                    acc[u as usize] = F5::ZERO;
                }
                touched.clear();
                if bad {
                    violations += 1;
                    if fail_fast {
                        return violations;
                    }
                }
            }
        }
        violations
    });
    counts.into_iter().sum()
}

// ---------------------------------------------------------------------
// structure claims

fn claim_dim(alg: &Melikian, _exec: Exec) -> Result<(Value, Value, String)> {
    Ok((json!(125), json!(alg.dim()), String::new()))
}

fn claim_component_dims(alg: &Melikian, _exec: Exec) -> Result<(Value, Value, String)> {
    let count = |d: i32| (0..DIM as u16).filter(|&i| alg.degree(i) == d).count();
    let computed = json!({
        "-3": count(-3), "-2": count(-2), "-1": count(-1), "0": count(0), "23": count(23),
    });
    let expected = json!({"-3": 2, "-2": 1, "-1": 2, "0": 4, "23": 2});
    Ok((expected, computed, String::new()))
}

fn claim_antisymmetry(alg: &Melikian, _exec: Exec) -> Result<(Value, Value, String)> {
    let mut violations = 0usize;
    for i in 0..DIM as u16 {
        if !alg.bracket(&alg.basis_vec(i), &alg.basis_vec(i)).is_zero() {
            violations += 1;
        }
        for j in (i + 1)..DIM as u16 {
            let ij = alg.bracket(&alg.basis_vec(i), &alg.basis_vec(j));
            let ji = alg.bracket(&alg.basis_vec(j), &alg.basis_vec(i));
            if !ij.add_scaled(&ji, F5::ONE).is_zero() {
                violations += 1;
            }
        }
    }
    Ok((
        json!({"pairs": 7750, "violations": 0}),
        json!({"pairs": 7750, "violations": violations}),
        String::new(),
    ))
}

fn claim_jacobi(alg: &Melikian, exec: Exec) -> Result<(Value, Value, String)> {
    let violations = jacobi_violations(alg, exec, false);
    Ok((
        json!({"triples": 317_750, "violations": 0}),
        json!({"triples": 317_750, "violations": violations}),
        String::new(),
    ))
}

fn additivity(alg: &Melikian, which: u8) -> usize {
    let mut violations = 0;
    for i in 0..DIM as u16 {
        for j in (i + 1)..DIM as u16 {
            for &(k, _) in alg.table_entry(i, j).iter() {
                let ok = match which {
                    0 => alg.degree(k) == alg.degree(i) + alg.degree(j),
                    1 => {
                        alg.weight(k).0 == (alg.weight(i).0 + alg.weight(j).0) % 5
                            && alg.weight(k).1 == (alg.weight(i).1 + alg.weight(j).1) % 5
                    }
                    _ => alg.z3(k) == (alg.z3(i) + alg.z3(j)) % 3,
                };
                if !ok {
                    violations += 1;
                }
            }
        }
    }
    violations
}

fn claim_degree_additivity(alg: &Melikian, _exec: Exec) -> Result<(Value, Value, String)> {
    Ok((json!({"violations": 0}), json!({"violations": additivity(alg, 0)}), String::new()))
}

fn claim_weight_additivity(alg: &Melikian, _exec: Exec) -> Result<(Value, Value, String)> {
    Ok((json!({"violations": 0}), json!({"violations": additivity(alg, 1)}), String::new()))
}

fn claim_z3_additivity(alg: &Melikian, _exec: Exec) -> Result<(Value, Value, String)> {
    Ok((json!({"violations": 0}), json!({"violations": additivity(alg, 2)}), String::new()))
}

fn claim_cartan_decomposition(alg: &Melikian, _exec: Exec) -> Result<(Value, Value, String)> {
    let mut spaces = 0;
    let mut all_dim_5 = true;
    for w1 in 0..5u8 {
        for w2 in 0..5u8 {
            spaces += 1;
            if alg.weight_space((w1, w2)).len() != 5 {
                all_dim_5 = false;
            }
        }
    }
    let deg_congruent = (0..DIM as u16).all(|i| {
        let (w1, w2) = alg.weight(i);
        alg.degree(i).rem_euclid(5) == (3 * (w1 as i32 + w2 as i32)).rem_euclid(5)
    });
    // ad(x_iD_i) acts on every generator by its weight component.
    let t = [alg.id(Sector::W, [1, 0], 0), alg.id(Sector::W, [0, 1], 1)];
    let torus_diagonal = (0..DIM as u16).all(|j| {
        (0..2).all(|c| {
            let br = alg.bracket(&alg.basis_vec(t[c]), &alg.basis_vec(j));
            let w = if c == 0 { alg.weight(j).0 } else { alg.weight(j).1 };
            br == alg.basis_vec(j).scale(F5::new(w))
        })
    });
    Ok((
        json!({"spaces": 25, "all_dim_5": true, "deg_congruent": true, "torus_diagonal": true}),
        json!({"spaces": spaces, "all_dim_5": all_dim_5, "deg_congruent": deg_congruent,
               "torus_diagonal": torus_diagonal}),
        String::new(),
    ))
}

fn claim_torus_centralizer(alg: &Melikian, _exec: Exec) -> Result<(Value, Value, String)> {
    let torus = Subspace::from_generator_ids(&[
        alg.id(Sector::W, [1, 0], 0),
        alg.id(Sector::W, [0, 1], 1),
    ]);
    let c = centralizer(alg, &torus, &Subspace::full());
    let expected_space = Subspace::from_generator_ids(&[
        alg.id(Sector::W, [1, 0], 0),
        alg.id(Sector::W, [0, 1], 1),
        alg.id(Sector::A, [2, 2], 0),
        alg.id(Sector::Wt, [4, 3], 0),
        alg.id(Sector::Wt, [3, 4], 1),
    ]);
    Ok((
        json!({"dim": 5, "matches": true}),
        json!({"dim": c.dim(), "matches": c == expected_space}),
        String::new(),
    ))
}

fn claim_center_trivial(alg: &Melikian, _exec: Exec) -> Result<(Value, Value, String)> {
    let full = Subspace::full();
    let c = centralizer(alg, &full, &full);
    Ok((json!({"dim": 0}), json!({"dim": c.dim()}), String::new()))
}

fn claim_simplicity(alg: &Melikian, _exec: Exec) -> Result<(Value, Value, String)> {
    let full = Subspace::full();
    let s = span_bracket(alg, &full, &full);
    Ok((json!({"span_dim": 125}), json!({"span_dim": s.dim()}), String::new()))
}

fn claim_restrictedness(alg: &Melikian, exec: Exec) -> Result<(Value, Value, String)> {
    let flat = alg.ad_flat_matrix();
    let solvable: Vec<bool> = map_collect(exec, (0..DIM as u16).collect(), |k| {
        alg.p_power_with(&flat, &alg.basis_vec(k)).is_ok()
    });
    let all = solvable.iter().all(|&b| b);
    let d1 = alg.basis_vec(alg.id(Sector::W, [0, 0], 0));
    let t1 = alg.basis_vec(alg.id(Sector::W, [1, 0], 0));
    let d1_p_zero = alg.p_power_with(&flat, &d1)?.is_zero();
    let x1d1_p_fixed = alg.p_power_with(&flat, &t1)? == t1;
    Ok((
        json!({"all_generators_have_p_power": true, "d1_p_zero": true, "x1d1_p_fixed": true}),
        json!({"all_generators_have_p_power": all, "d1_p_zero": d1_p_zero,
               "x1d1_p_fixed": x1d1_p_fixed}),
        "p-power reconstructed from ad-faithfulness; the defining data does not include it".into(),
    ))
}

// ---------------------------------------------------------------------
// cohomology claims

fn claim_h0_adjoint(alg: &Melikian, exec: Exec) -> Result<(Value, Value, String)> {
    let cx = Complex::new(Domain::full(alg), Coefficients::Adjoint(alg))?;
    let h0 = h_total(&cx, 0, exec);
    let full = Subspace::full();
    let c = centralizer(alg, &full, &full);
    Ok((
        json!({"h0": 0, "centralizer_dim": 0}),
        json!({"h0": h0, "centralizer_dim": c.dim()}),
        "two routes: kernel of the degree-0 differential and the joint adjoint nullspace".into(),
    ))
}

fn claim_h1_vanishing(alg: &Melikian, exec: Exec) -> Result<(Value, Value, String)> {
    let cx = Complex::new(Domain::full(alg), Coefficients::Adjoint(alg))?;
    Ok((json!({"h1": 0}), json!({"h1": h_total(&cx, 1, exec)}), String::new()))
}

fn claim_main_theorem(alg: &Melikian, exec: Exec) -> Result<(Value, Value, String)> {
    let cx = Complex::new(Domain::full(alg), Coefficients::Adjoint(alg))?;
    let rep = cohomology_dim(&cx, 2, exec);
    let by_degree = h_by_degree(&rep);
    let ders = canonical_derivations(alg);
    let cocycles: Vec<_> = ders.iter().map(|d| sq(alg, d)).collect();
    let refs: Vec<&_> = cocycles.iter().collect();
    let cert = certify_classes(alg, &refs, exec)?;
    let expected = json!({
        "total": 5,
        "by_degree": {"-15": 2, "-10": 1, "-5": 2},
        "sq_independent": {"-15": 2, "-10": 1, "-5": 2},
        "sq_cocycles": true,
    });
    let computed = json!({
        "total": rep.total,
        "by_degree": json_by_degree(&by_degree),
        "sq_independent": json_by_degree(&cert.independent_by_degree),
        "sq_cocycles": cert.cocycles_ok,
    });
    Ok((expected, computed, "independence measured as rank growth over the coboundary rows".into()))
}

fn claim_hs_m3(alg: &Melikian, exec: Exec) -> Result<(Value, Value, String)> {
    let cx = Complex::new(dom(alg, DegreePred::Eq(-3), "m-3")?, Coefficients::Adjoint(alg))?;
    let dims: Vec<usize> = (0..3).map(|n| h_total(&cx, n, exec)).collect();
    Ok((json!([5, 10, 5]), json!(dims), String::new()))
}

fn claim_hs_le2(alg: &Melikian, exec: Exec) -> Result<(Value, Value, String)> {
    let cx = Complex::new(dom(alg, DegreePred::Le(-2), "le-2")?, Coefficients::Adjoint(alg))?;
    let dims: Vec<usize> = (0..3).map(|n| h_total(&cx, n, exec)).collect();
    Ok((json!([3, 9, 9]), json!(dims), String::new()))
}

fn claim_h1_negative(alg: &Melikian, exec: Exec) -> Result<(Value, Value, String)> {
    let cx = Complex::new(dom(alg, DegreePred::Lt(0), "lt0")?, Coefficients::Adjoint(alg))?;
    Ok((json!({"h1": 7}), json!({"h1": h_total(&cx, 1, exec)}), String::new()))
}

// ---------------------------------------------------------------------
// squaring claims

fn claim_sq_values(alg: &Melikian, _exec: Exec) -> Result<(Value, Value, String)> {
    let ders = canonical_derivations(alg);
    let sq_dt: Vec<_> = ders[..2].iter().map(|d| sq(alg, d)).collect();
    let sq_one = sq(alg, &ders[2]);
    let sq_d: Vec<_> = ders[3..].iter().map(|d| sq(alg, d)).collect();
    let w = |a1, a2, dir| alg.id(Sector::W, [a1, a2], dir);
    let wt = |a1, a2, dir| alg.id(Sector::Wt, [a1, a2], dir);
    let a = |a1, a2| alg.id(Sector::A, [a1, a2], 0);
    let dv = |dir: u8| alg.basis_vec(w(0, 0, dir));

    let twisted = sq_dt[0].value(w(1, 0, 1), wt(1, 0, 1)) == dv(0)
        && sq_dt[1].value(w(0, 1, 0), wt(0, 1, 0)) == dv(1);
    let constant = sq_one.value(a(1, 0), w(1, 2, 0)) == dv(0).scale(F5::new(2))
        && sq_one.value(a(0, 1), w(2, 1, 1)) == dv(1).scale(F5::new(2))
        && sq_one.value(a(1, 0), w(0, 3, 1)) == dv(0)
        && sq_one.value(a(0, 1), w(3, 0, 0)) == dv(1);
    let witt = sq_d[0].value(w(1, 0, 1), w(4, 1, 1)) == dv(1)
        && sq_d[1].value(w(0, 1, 0), w(1, 4, 0)) == dv(0)
        && sq_d[0].value(w(1, 0, 1), w(3, 2, 1)).is_zero()
        && sq_d[1].value(w(0, 1, 0), w(2, 3, 0)).is_zero();
    let nilpotence = ders.iter().all(|d| nilpotence_consistent(alg, d));
    Ok((
        json!({"twisted": true, "constant": true, "witt": true, "nilpotence_consistent": true}),
        json!({"twisted": twisted, "constant": constant, "witt": witt,
               "nilpotence_consistent": nilpotence}),
        String::new(),
    ))
}

fn claim_sq_cocycles(alg: &Melikian, _exec: Exec) -> Result<(Value, Value, String)> {
    let cx = Complex::new(Domain::full(alg), Coefficients::Adjoint(alg))?;
    let ders = canonical_derivations(alg);
    let mut degrees = Vec::new();
    let mut all_closed = true;
    let mut homogeneous = true;
    for der in &ders {
        let c = sq(alg, der);
        let d = c.degree.ok_or_else(|| Error::Usage(format!("{} not homogeneous", c.label)))?;
        degrees.push(d);
        homogeneous &= degree_homogeneous(alg, &c);
        let block = cx.block(2, (0, 0), d);
        let upper = cx.block(3, (0, 0), d);
        let dm = differential(&cx, &block, &upper);
        let coords = sq_coordinates(&c, &block)?;
        all_closed &= dm.matvec(&coords)?.is_zero();
    }
    Ok((
        json!({"degrees": [-5, -5, -10, -15, -15], "all_closed": true, "homogeneous": true}),
        json!({"degrees": degrees, "all_closed": all_closed, "homogeneous": homogeneous}),
        String::new(),
    ))
}

fn claim_sq_independence(alg: &Melikian, exec: Exec) -> Result<(Value, Value, String)> {
    let ders = canonical_derivations(alg);
    let cocycles: Vec<_> = ders.iter().map(|d| sq(alg, d)).collect();
    let refs: Vec<&_> = cocycles.iter().collect();
    let cert = certify_classes(alg, &refs, exec)?;
    Ok((
        json!({"-15": 2, "-10": 1, "-5": 2}),
        json_by_degree(&cert.independent_by_degree),
        String::new(),
    ))
}

// ---------------------------------------------------------------------
// step claims

fn claim_step1(alg: &Melikian, exec: Exec) -> Result<(Value, Value, String)> {
    let cx = Complex::new(Domain::full(alg), Coefficients::Adjoint(alg))?;
    let rel = RelativeComplex::new(&cx, &graded_ids(alg, DegreePred::Lt(0)))?;
    let (total, by_degree) = rel.h_dim(2, exec)?;
    Ok((
        json!({"total": 5, "by_degree": {"-15": 2, "-10": 1, "-5": 2}}),
        json!({"total": total, "by_degree": json_by_degree(&by_degree)}),
        "expected value kept as claimed; the computation refutes it: at degrees -5 and -10 \
         no weight-0 cocycle vanishes on pairs touching the negative part at all, so the \
         twisted and constant squaring classes have no relative representatives (see the \
         step1-filtration claim for the verified profile; H^2(M,M) = 5 itself is unaffected \
         and verified directly by main-theorem)"
            .into(),
    ))
}

fn claim_step1_filtration(alg: &Melikian, exec: Exec) -> Result<(Value, Value, String)> {
    let cx = Complex::new(Domain::full(alg), Coefficients::Adjoint(alg))?;
    let rel = RelativeComplex::new(&cx, &graded_ids(alg, DegreePred::Lt(0)))?;
    let profile = rel.filtration_profile(2, exec);
    let level = |j: usize| -> Vec<(i32, usize)> {
        profile
            .iter()
            .filter(|(_, p)| p[j] > 0)
            .map(|&(d, ref p)| (d, p[j]))
            .collect()
    };
    let (h2, f1, f2) = (level(2), level(1), level(0));
    let sum = |v: &[(i32, usize)]| v.iter().map(|&(_, x)| x).sum::<usize>();
    let graded = vec![
        sum(&h2) - sum(&f1), // classes needing two negative arguments
        sum(&f1) - sum(&f2), // exactly one negative argument
        sum(&f2),            // fully supported on the nonnegative part
    ];
    Ok((
        json!({
            "h2_by_degree": {"-15": 2, "-10": 1, "-5": 2},
            "one_negative_arg_by_degree": {"-15": 2, "-10": 1, "-5": 2},
            "no_negative_arg_by_degree": {"-15": 2},
            "graded_parts": [0, 3, 2],
        }),
        json!({
            "h2_by_degree": json_by_degree(&h2),
            "one_negative_arg_by_degree": json_by_degree(&f1),
            "no_negative_arg_by_degree": json_by_degree(&f2),
            "graded_parts": graded,
        }),
        "engine-derived filtration profile of weight-0 H^2 by the number of negative \
         arguments a representative must accept; expected values frozen from the verified \
         computation, cross-checked against the dense elimination oracle and a literal \
         cochain evaluator"
            .into(),
    ))
}

fn claim_step2_bound(alg: &Melikian, exec: Exec) -> Result<(Value, Value, String)> {
    // dim H²(M≥0, M₋₃) at weight 0.
    let ge0 = Complex::new(dom(alg, DegreePred::Ge(0), "ge0")?, Coefficients::NegThree(alg))?;
    let h2 = h_total(&ge0, 2, exec);
    // Injectivity of restriction+projection on the relative cocycles.
    let full = Complex::new(Domain::full(alg), Coefficients::Adjoint(alg))?;
    let rel = RelativeComplex::new(&full, &graded_ids(alg, DegreePred::Lt(0)))?;
    let d1 = alg.id(Sector::W, [0, 0], 0);
    let d2 = alg.id(Sector::W, [0, 0], 1);
    let mids = full.block_family(2, (0, 0));
    let degrees: Vec<i32> = mids.keys().copied().collect();
    let inj_results = map_collect(exec, degrees, |d| -> Result<bool> {
        let mid = &mids[&d];
        let rel_basis = rel.relative_basis(mid)?;
        if rel_basis.is_empty() {
            return Ok(true);
        }
        // relative cocycles: kernel of d² restricted to the span.
        let upper = full.block(3, (0, 0), d);
        let dm = differential(&full, mid, &upper);
        let images: Vec<SparseVec> = rel_basis.iter().map(|v| dm.matvec(v).unwrap()).collect();
        let img_mat = columns_matrix(&images, upper.dim());
        let lambdas = rank_nullspace(&img_mat).nullspace;
        if lambdas.is_empty() {
            return Ok(true);
        }
        let z_rel: Vec<SparseVec> = lambdas
            .iter()
            .map(|l| combine(&rel_basis, l, mid.dim() as u32))
            .collect();
        // φ₂: keep entries with both arguments in M≥0 and target in M₋₃.
        let dst_block = ge0.block(2, (0, 0), d);
        let projected: Vec<SparseVec> = z_rel
            .iter()
            .map(|v| phi2_project(&full, mid, &ge0, &dst_block, v, d1, d2))
            .collect();
        let proj_mat = columns_matrix(&projected, dst_block.dim());
        Ok(rank(&proj_mat) == z_rel.len())
    });
    let mut injective = true;
    for r in inj_results {
        injective &= r?;
    }
    Ok((
        json!({"h2_ge0": 5, "phi2_injective_on_relative_cocycles": true}),
        json!({"h2_ge0": h2, "phi2_injective_on_relative_cocycles": injective}),
        "the value 5 itself follows from the step chain, not from a displayed count".into(),
    ))
}

fn claim_step3_bound(alg: &Melikian, exec: Exec) -> Result<(Value, Value, String)> {
    let ge0 = Complex::new(dom(alg, DegreePred::Ge(0), "ge0")?, Coefficients::NegThree(alg))?;
    let h2 = h_total(&ge0, 2, exec);
    let ge1 = Complex::new(dom(alg, DegreePred::Ge(1), "ge1")?, Coefficients::NegThree(alg))?;
    let inv = invariant_cohomology(&ge1, 2, &m0_actors(alg), exec)?;
    let bound = 2 + inv.total;
    Ok((
        json!({"h2_ge0": 5, "bound": 5, "holds": true}),
        json!({"h2_ge0": h2, "bound": bound, "holds": h2 <= bound}),
        "encodes the H² reading of the reduction; the displayed statement prints H³ where \
         its own exact sequence uses H²"
            .into(),
    ))
}

fn claim_step4_invariants(alg: &Melikian, exec: Exec) -> Result<(Value, Value, String)> {
    let ge1 = Complex::new(dom(alg, DegreePred::Ge(1), "ge1")?, Coefficients::NegThree(alg))?;
    let inv = invariant_cohomology(&ge1, 2, &m0_actors(alg), exec)?;
    // The three squaring classes restrict (with projection of values to
    // M₋₃) to invariant classes that account for the whole group.
    let ders = canonical_derivations(alg);
    let pick = |label: &str| ders.iter().find(|d| d.label == label).unwrap();
    let cases: [(&str, i32); 3] = [("1", -10), ("D1", -15), ("D2", -15)];
    let off_torus = [alg.id(Sector::W, [1, 0], 1), alg.id(Sector::W, [0, 1], 0)];
    let mut span_ok = true;
    let mut per_degree: std::collections::BTreeMap<i32, Vec<SparseVec>> = Default::default();
    for (label, d) in cases {
        let c = sq(alg, pick(label));
        let block = ge1.block(2, (0, 0), d);
        let coords = sq_projected_coords(alg, &c, &ge1, &block)?;
        if coords.is_zero() {
            span_ok = false;
            continue;
        }
        // cocycle in the restricted complex
        let upper = ge1.block(3, (0, 0), d);
        let dm = differential(&ge1, &block, &upper);
        span_ok &= dm.matvec(&coords)?.is_zero();
        // invariance: each off-torus actor maps it into the coboundaries
        for &g in &off_torus {
            let wg = alg.weight(g);
            let dst = ge1.block(2, ((wg.0) % 5, (wg.1) % 5), d);
            let act = action_matrix(&ge1, g, &block, &dst)?;
            let img = act.matvec(&coords)?;
            let dst_lower = ge1.block(1, ((wg.0) % 5, (wg.1) % 5), d);
            let member = if img.is_zero() {
                true
            } else if dst_lower.dim() == 0 {
                false
            } else {
                solve(&differential(&ge1, &dst_lower, &dst), &img)?.is_some()
            };
            span_ok &= member;
        }
        per_degree.entry(d).or_default().push(coords);
    }
    // independence modulo coboundaries, per degree
    let mut indep = Vec::new();
    for (d, vecs) in &per_degree {
        let lower = ge1.block(1, (0, 0), *d);
        let block = ge1.block(2, (0, 0), *d);
        let d1t = if lower.dim() > 0 {
            differential(&ge1, &lower, &block).transpose()
        } else {
            SparseMatrix::zero(0, block.dim() as u32)
        };
        indep.push((*d, rank_delta(&d1t, vecs)?));
    }
    Ok((
        json!({"dim": 3, "by_degree": {"-15": 2, "-10": 1},
               "sq_span": true, "sq_independent": {"-15": 2, "-10": 1}}),
        json!({"dim": inv.total, "by_degree": json_by_degree(&inv.by_degree),
               "sq_span": span_ok, "sq_independent": json_by_degree(&indep)}),
        String::new(),
    ))
}

// ---------------------------------------------------------------------
// lemma claims

fn claim_commutator(alg: &Melikian, _exec: Exec) -> Result<(Value, Value, String)> {
    let ge1 = graded_part(alg, DegreePred::Ge(1));
    let span = span_bracket(alg, &ge1, &ge1);
    let line = SparseVec::from_pairs(
        DIM as u32,
        vec![
            (alg.id(Sector::Wt, [1, 0], 0) as u32, F5::ONE),
            (alg.id(Sector::Wt, [0, 1], 1) as u32, F5::ONE),
        ],
    );
    let expected_space =
        graded_part(alg, DegreePred::Ge(3)).sum(&Subspace::from_vectors(&[line]));
    Ok((
        json!({"dim": 111, "matches": true}),
        json!({"dim": span.dim(), "matches": span == expected_space}),
        String::new(),
    ))
}

fn claim_m0_coefficients_vanish(alg: &Melikian, exec: Exec) -> Result<(Value, Value, String)> {
    let cx = Complex::new(dom(alg, DegreePred::Eq(0), "m0")?, Coefficients::NegThree(alg))?;
    let dims: Vec<usize> = (0..5).map(|n| h_total(&cx, n, exec)).collect();
    // The homogeneity argument: there are no weight-(0,0) cochains at all.
    let mut empty = true;
    for n in 0..5 {
        empty &= cx.block_family(n, (0, 0)).values().all(|b| b.dim() == 0);
    }
    Ok((
        json!({"h": [0, 0, 0, 0, 0], "no_homogeneous_cochains": true}),
        json!({"h": dims, "no_homogeneous_cochains": empty}),
        String::new(),
    ))
}

fn claim_h1_ge1(alg: &Melikian, exec: Exec) -> Result<(Value, Value, String)> {
    let cx = Complex::new(dom(alg, DegreePred::Ge(1), "ge1")?, Coefficients::NegThree(alg))?;
    let rep = cohomology_dim(&cx, 1, exec);
    // Shape: cocycles live on M₁ ⊕ M₂ and satisfy f(x̃1D1) = −f(x̃2D2).
    let e1 = cx.domain.local(alg.id(Sector::Wt, [1, 0], 0)).unwrap();
    let e2 = cx.domain.local(alg.id(Sector::Wt, [0, 1], 1)).unwrap();
    let mut shape = true;
    for w1 in 0..5u8 {
        for w2 in 0..5u8 {
            for (_, block) in cx.block_family(1, (w1, w2)) {
                if block.dim() == 0 {
                    continue;
                }
                let upper = cx.block(2, (w1, w2), block.id.degree);
                let dm = differential(&cx, &block, &upper);
                for z in rank_nullspace(&dm).nullspace {
                    for (k, _) in z.iter() {
                        let ti = block.entry_tuple[k as usize] as usize;
                        let deg = cx.domain.degree_local(block.tuple(ti)[0]);
                        shape &= deg == 1 || deg == 2;
                    }
                    for t in 0..2u16 {
                        let v1 = block
                            .lookup_tuple(&[e1])
                            .and_then(|ti| block.find_entry(ti, t))
                            .map(|k| z.get(k))
                            .unwrap_or(F5::ZERO);
                        let v2 = block
                            .lookup_tuple(&[e2])
                            .and_then(|ti| block.find_entry(ti, t))
                            .map(|k| z.get(k))
                            .unwrap_or(F5::ZERO);
                        shape &= (v1 + v2).is_zero();
                    }
                }
            }
        }
    }
    Ok((
        json!({"dim": 10, "shape": true}),
        json!({"dim": rep.total, "shape": shape}),
        "dimension 2(dim M1 + dim M2) − 2 computed by the engine itself".into(),
    ))
}

fn claim_m0_action_on_h1(alg: &Melikian, exec: Exec) -> Result<(Value, Value, String)> {
    let ge1 = Complex::new(dom(alg, DegreePred::Ge(1), "ge1")?, Coefficients::NegThree(alg))?;
    let module = cocycle_module(alg, &ge1, 1)?;
    let dim = module.dim();
    let m0 = Complex::new(dom(alg, DegreePred::Eq(0), "m0")?, Coefficients::Explicit(module))?;
    let h0 = h_total(&m0, 0, exec);
    let h1 = h_total(&m0, 1, exec);
    Ok((
        json!({"module_dim": 10, "h0": 0, "h1": 2}),
        json!({"module_dim": dim, "h0": h0, "h1": h1}),
        "the two classes are the restrictions of the twisted squaring cocycles".into(),
    ))
}

fn claim_inv_cochain_d17(alg: &Melikian, exec: Exec) -> Result<(Value, Value, String)> {
    let actors = [alg.id(Sector::W, [1, 0], 1), alg.id(Sector::W, [0, 1], 0)];
    let degrees: Vec<i32> = (3..=23).collect();
    let dims = map_collect(exec, degrees.clone(), |d| -> Result<usize> {
        let md = Domain::quotient_window(alg, d, d, &format!("m{d}"));
        let cx = Complex::new(md, Coefficients::NegThree(alg))?;
        let block = cx.block(1, (0, 0), -3 - d);
        if block.dim() == 0 {
            return Ok(0);
        }
        let mut stacked: Vec<SparseVec> = Vec::new();
        for &g in &actors {
            let wg = alg.weight(g);
            let dst = cx.block(1, (wg.0 % 5, wg.1 % 5), -3 - d);
            let act = action_matrix(&cx, g, &block, &dst)?;
            stacked.extend(act.rows().iter().cloned());
        }
        let m = SparseMatrix::from_rows(stacked, block.dim() as u32)?;
        Ok(block.dim() - rank(&m))
    });
    let mut nonzero = Map::new();
    for (d, r) in degrees.iter().zip(dims) {
        let v = r?;
        if v > 0 {
            nonzero.insert(d.to_string(), json!(v));
        }
    }
    Ok((
        json!({"nonzero": {"17": 1}}),
        json!({"nonzero": Value::Object(nonzero)}),
        "invariant 1-cochains on each graded piece, scanned over degrees 3..=23".into(),
    ))
}

fn claim_h1_m0_cochain_scan(alg: &Melikian, exec: Exec) -> Result<(Value, Value, String)> {
    let degrees: Vec<i32> = (3..=23).collect();
    let per = map_collect(exec, degrees.clone(), |d| -> Result<(usize, usize)> {
        let md = Domain::quotient_window(alg, d, d, &format!("m{d}"));
        let cx = Complex::new(md, Coefficients::NegThree(alg))?;
        let module = cochain_module(alg, &cx, 1)?;
        let m0 = Complex::new(dom(alg, DegreePred::Eq(0), "m0")?, Coefficients::Explicit(module))?;
        Ok((h_total(&m0, 0, Exec::Sequential), h_total(&m0, 1, Exec::Sequential)))
    });
    let mut h0_nonzero = Map::new();
    let mut h1_nonzero = Map::new();
    for (d, r) in degrees.iter().zip(per) {
        let (h0, h1) = r?;
        if h0 > 0 {
            h0_nonzero.insert(d.to_string(), json!(h0));
        }
        if h1 > 0 {
            h1_nonzero.insert(d.to_string(), json!(h1));
        }
    }
    Ok((
        json!({"h0_nonzero": {"17": 1}, "h1_nonzero": {"12": 2, "17": 1}}),
        json!({"h0_nonzero": Value::Object(h0_nonzero), "h1_nonzero": Value::Object(h1_nonzero)}),
        "invariants recomputed as H⁰ agree with the direct invariant scan".into(),
    ))
}

// ---------------------------------------------------------------------
// modules built from cochain and cocycle spaces

/// C^n(domain, coeff) over all weights as an explicit module with the four
/// degree-0 generators acting by the cochain action.
fn cochain_module(
    alg: &Melikian,
    cx: &Complex,
    n: usize,
) -> Result<crate::cohomology::ExplicitModule> {
    let actors = m0_actors(alg);
    let mut weights = Vec::new();
    let mut degrees = Vec::new();
    let mut blocks = Vec::new();
    let mut offsets = std::collections::HashMap::new();
    for w1 in 0..5u8 {
        for w2 in 0..5u8 {
            for (d, block) in cx.block_family(n, (w1, w2)) {
                if block.dim() == 0 {
                    continue;
                }
                offsets.insert(((w1, w2), d), weights.len());
                for _ in 0..block.dim() {
                    weights.push((w1, w2));
                    degrees.push(d);
                }
                blocks.push(block);
            }
        }
    }
    let mut actions = std::collections::HashMap::new();
    for &g in &actors {
        let wg = alg.weight(g);
        let mut vecs: Vec<smallvec::SmallVec<[(u16, F5); 4]>> =
            vec![smallvec::SmallVec::new(); weights.len()];
        for block in &blocks {
            let (w, d) = (block.id.weight, block.id.degree);
            let src_off = offsets[&(w, d)];
            let dst_w = ((w.0 + wg.0) % 5, (w.1 + wg.1) % 5);
            let dst = cx.block(n, dst_w, d);
            let act = action_matrix(cx, g, block, &dst)?;
            let dst_off = match offsets.get(&(dst_w, d)) {
                Some(&o) => o,
                None => {
                    if !act.is_zero() {
                        return Err(Error::Stability("action leaves the tabulated module".into()));
                    }
                    continue;
                }
            };
            for (r, row) in act.rows().iter().enumerate() {
                for (c, v) in row.iter() {
                    vecs[src_off + c as usize].push(((dst_off + r) as u16, v));
                }
            }
        }
        for v in vecs.iter_mut() {
            v.sort_unstable_by_key(|&(i, _)| i);
        }
        actions.insert(g, vecs);
    }
    Ok(crate::cohomology::ExplicitModule::new(
        weights,
        degrees,
        actions,
        format!("C^{n}({}, m-3)", cx.domain.label),
    ))
}

/// Z^n(domain, coeff) over all weights as an explicit module. Nullspace
/// vectors are the canonical free-column representatives, so coordinates
/// in the Z-basis can be read off the free columns directly.
fn cocycle_module(
    alg: &Melikian,
    cx: &Complex,
    n: usize,
) -> Result<crate::cohomology::ExplicitModule> {
    struct ZBlock {
        block: CochainBlock,
        z: Vec<SparseVec>,
        free_cols: Vec<u32>,
        offset: usize,
    }
    let actors = m0_actors(alg);
    let mut weights = Vec::new();
    let mut degrees = Vec::new();
    let mut zblocks: Vec<ZBlock> = Vec::new();
    let mut index = std::collections::HashMap::new();
    for w1 in 0..5u8 {
        for w2 in 0..5u8 {
            for (d, block) in cx.block_family(n, (w1, w2)) {
                if block.dim() == 0 {
                    continue;
                }
                let upper = cx.block(n + 1, (w1, w2), d);
                let res = rank_nullspace(&differential(cx, &block, &upper));
                if res.nullspace.is_empty() {
                    continue;
                }
                let pivots: std::collections::BTreeSet<usize> =
                    res.pivot_columns.iter().copied().collect();
                let free_cols: Vec<u32> = (0..block.dim())
                    .filter(|c| !pivots.contains(c))
                    .map(|c| c as u32)
                    .collect();
                let offset = weights.len();
                for _ in 0..res.nullspace.len() {
                    weights.push((w1, w2));
                    degrees.push(d);
                }
                index.insert(((w1, w2), d), zblocks.len());
                zblocks.push(ZBlock { block, z: res.nullspace, free_cols, offset });
            }
        }
    }
    let mut actions = std::collections::HashMap::new();
    for &g in &actors {
        let wg = alg.weight(g);
        let mut vecs: Vec<smallvec::SmallVec<[(u16, F5); 4]>> =
            vec![smallvec::SmallVec::new(); weights.len()];
        for zb in &zblocks {
            let (w, d) = (zb.block.id.weight, zb.block.id.degree);
            let dst_w = ((w.0 + wg.0) % 5, (w.1 + wg.1) % 5);
            let dst_zb = index.get(&(dst_w, d)).map(|&k| &zblocks[k]);
            let dst_block = cx.block(n, dst_w, d);
            let act = action_matrix(cx, g, &zb.block, &dst_block)?;
            for (j, z) in zb.z.iter().enumerate() {
                let img = act.matvec(z)?;
                if img.is_zero() {
                    continue;
                }
                let dst_zb = dst_zb.ok_or_else(|| {
                    Error::Stability("cocycle maps outside the tabulated cocycle space".into())
                })?;
                // coordinates in the target Z-basis via the free columns
                let mut coords: smallvec::SmallVec<[(u16, F5); 4]> = smallvec::SmallVec::new();
                let mut residual = img.clone();
                for (zi, &fc) in dst_zb.free_cols.iter().enumerate() {
                    let c = img.get(fc);
                    if !c.is_zero() {
                        coords.push(((dst_zb.offset + zi) as u16, c));
                        residual = residual.add_scaled(&dst_zb.z[zi], -c);
                    }
                }
                if !residual.is_zero() {
                    return Err(Error::Stability(
                        "action image is not a combination of target cocycles".into(),
                    ));
                }
                vecs[zb.offset + j] = coords;
            }
        }
        actions.insert(g, vecs);
    }
    Ok(crate::cohomology::ExplicitModule::new(
        weights,
        degrees,
        actions,
        format!("Z^{n}({}, m-3)", cx.domain.label),
    ))
}

// ---------------------------------------------------------------------
// small vector/matrix helpers

fn columns_matrix(cols: &[SparseVec], nrows: usize) -> SparseMatrix {
    let mut trips = Vec::new();
    for (j, v) in cols.iter().enumerate() {
        for (r, c) in v.iter() {
            trips.push((r, j as u32, c));
        }
    }
    SparseMatrix::from_triplets(nrows, cols.len() as u32, &trips)
}

fn combine(basis: &[SparseVec], lambda: &SparseVec, dim: u32) -> SparseVec {
    let mut acc = SparseVec::zero(dim);
    for (i, c) in lambda.iter() {
        acc = acc.add_scaled(&basis[i as usize], c);
    }
    acc
}

#[allow(clippy::too_many_arguments)]
fn phi2_project(
    full: &Complex,
    src_block: &CochainBlock,
    ge0: &Complex,
    dst_block: &CochainBlock,
    v: &SparseVec,
    d1: u16,
    d2: u16,
) -> SparseVec {
    let mut pairs = Vec::new();
    for (k, c) in v.iter() {
        let (tuple, target) = src_block.entry(k as usize);
        let t = if target == d1 {
            0u16
        } else if target == d2 {
            1u16
        } else {
            continue;
        };
        let (gi, gj) = (full.domain.global(tuple[0]), full.domain.global(tuple[1]));
        let (li, lj) = match (ge0.domain.local(gi), ge0.domain.local(gj)) {
            (Some(a), Some(b)) => (a, b),
            _ => continue,
        };
        if let Some(ti) = dst_block.lookup_tuple(&[li.min(lj), li.max(lj)]) {
            if let Some(entry) = dst_block.find_entry(ti, t) {
                pairs.push((entry, c));
            }
        }
    }
    SparseVec::from_pairs(dst_block.dim() as u32, pairs)
}

// ---------------------------------------------------------------------
// the catalog

static CATALOG: [ClaimDef; 32] = [
    ClaimDef {
        id: "dim-125",
        tag: "structure",
        paper_ref: "M = A(2) + W(2) + W~(2) has dimension 125",
        run: claim_dim,
    },
    ClaimDef {
        id: "component-dims",
        tag: "structure",
        paper_ref: "graded pieces: dim M_-3 = 2, M_-2 = 1, M_-1 = 2, M_0 = 4, M_23 = 2",
        run: claim_component_dims,
    },
    ClaimDef {
        id: "antisymmetry",
        tag: "structure",
        paper_ref: "the bracket is antisymmetric on all generator pairs",
        run: claim_antisymmetry,
    },
    ClaimDef {
        id: "jacobi",
        tag: "structure",
        paper_ref: "the Jacobi identity holds on all 317750 generator triples",
        run: claim_jacobi,
    },
    ClaimDef {
        id: "degree-additivity",
        tag: "structure",
        paper_ref: "brackets of homogeneous generators are homogeneous of the summed degree",
        run: claim_degree_additivity,
    },
    ClaimDef {
        id: "weight-additivity",
        tag: "structure",
        paper_ref: "torus weights add under the bracket",
        run: claim_weight_additivity,
    },
    ClaimDef {
        id: "z3-additivity",
        tag: "structure",
        paper_ref: "the three-sector grading adds under the bracket",
        run: claim_z3_additivity,
    },
    ClaimDef {
        id: "cartan-decomposition",
        tag: "structure",
        paper_ref: "25 weight spaces of dimension 5; deg E = 3(w1+w2) mod 5 on each",
        run: claim_cartan_decomposition,
    },
    ClaimDef {
        id: "torus-centralizer",
        tag: "structure",
        paper_ref: "the centralizer of the torus is the 5-dimensional canonical Cartan subalgebra",
        run: claim_torus_centralizer,
    },
    ClaimDef {
        id: "center-trivial",
        tag: "structure",
        paper_ref: "the center of M is zero",
        run: claim_center_trivial,
    },
    ClaimDef {
        id: "simplicity",
        tag: "structure",
        paper_ref: "[M, M] = M",
        run: claim_simplicity,
    },
    ClaimDef {
        id: "restrictedness",
        tag: "structure",
        paper_ref: "every ad(x)^5 is again an adjoint operator; the p-power of D_i is 0 and of x_iD_i is itself",
        run: claim_restrictedness,
    },
    ClaimDef {
        id: "h0-adjoint",
        tag: "cohomology",
        paper_ref: "H^0(M, M) = 0 (trivial center)",
        run: claim_h0_adjoint,
    },
    ClaimDef {
        id: "h1-vanishing",
        tag: "cohomology",
        paper_ref: "H^1(M, M) = 0",
        run: claim_h1_vanishing,
    },
    ClaimDef {
        id: "main-theorem",
        tag: "cohomology",
        paper_ref: "dim H^2(M, M) = 5, spanned by the squaring cocycles of degrees -5, -10, -15",
        run: claim_main_theorem,
    },
    ClaimDef {
        id: "hs-m3",
        tag: "cohomology",
        paper_ref: "H^s of the lowest graded piece with adjoint coefficients has dims (5, 10, 5)",
        run: claim_hs_m3,
    },
    ClaimDef {
        id: "hs-le2",
        tag: "cohomology",
        paper_ref: "H^s of the degree <= -2 part with adjoint coefficients has dims (3, 9, 9)",
        run: claim_hs_le2,
    },
    ClaimDef {
        id: "h1-negative",
        tag: "cohomology",
        paper_ref: "H^1 of the negative part with adjoint coefficients has dimension 7",
        run: claim_h1_negative,
    },
    ClaimDef {
        id: "sq-values",
        tag: "squaring",
        paper_ref: "displayed squaring values: Sq(Dt_i), Sq(1), Sq(D_i) on their witness pairs",
        run: claim_sq_values,
    },
    ClaimDef {
        id: "sq-cocycles",
        tag: "squaring",
        paper_ref: "the five squaring cochains are closed, of degrees -5, -5, -10, -15, -15",
        run: claim_sq_cocycles,
    },
    ClaimDef {
        id: "sq-independence",
        tag: "squaring",
        paper_ref: "independence mod coboundaries: 2 classes at -5, 1 at -10, 2 at -15",
        run: claim_sq_independence,
    },
    ClaimDef {
        id: "step1",
        tag: "steps",
        paper_ref: "H^2(M, M) equals the relative cohomology orthogonal to the negative part, dim 5",
        run: claim_step1,
    },
    ClaimDef {
        id: "step1-filtration",
        tag: "steps",
        paper_ref: "filtration profile of H^2 by negative arguments: graded parts (0, 3, 2)",
        run: claim_step1_filtration,
    },
    ClaimDef {
        id: "step2-bound",
        tag: "steps",
        paper_ref: "relative H^2 embeds into H^2 of the nonnegative part with projected coefficients",
        run: claim_step2_bound,
    },
    ClaimDef {
        id: "step3-bound",
        tag: "steps",
        paper_ref: "dim H^2(ge0, m-3) <= 2 + dim of the invariant H^2 of the positive part",
        run: claim_step3_bound,
    },
    ClaimDef {
        id: "step4-invariants",
        tag: "steps",
        paper_ref: "the invariant H^2 of the positive part is 3-dimensional: Sq(D_1), Sq(D_2), Sq(1)",
        run: claim_step4_invariants,
    },
    ClaimDef {
        id: "commutator-lemma",
        tag: "lemmas",
        paper_ref: "[M_{>=1}, M_{>=1}] = M_{>=3} + the line through x~1D1 + x~2D2",
        run: claim_commutator,
    },
    ClaimDef {
        id: "m0-coefficients-vanish",
        tag: "lemmas",
        paper_ref: "H^r(M_0, m-3) = 0 for r = 0..4: no homogeneous cochains exist",
        run: claim_m0_coefficients_vanish,
    },
    ClaimDef {
        id: "h1-ge1",
        tag: "lemmas",
        paper_ref: "H^1(ge1, m-3) = cochains on M_1 + M_2 with f(x~1D1) = -f(x~2D2); dim 10",
        run: claim_h1_ge1,
    },
    ClaimDef {
        id: "m0-action-on-h1",
        tag: "lemmas",
        paper_ref: "H^0 and H^1 of M_0 with coefficients in the cocycle module Z^1(ge1, m-3): 0 and 2",
        run: claim_m0_action_on_h1,
    },
    ClaimDef {
        id: "inv-cochain-d17",
        tag: "lemmas",
        paper_ref: "invariant 1-cochains on M_d with m-3 values: one at d = 17, none elsewhere in 3..=23",
        run: claim_inv_cochain_d17,
    },
    ClaimDef {
        id: "h1-m0-cochain-scan",
        tag: "lemmas",
        paper_ref: "H^1(M_0, C^1(M_d, m-3)): 2 at d = 12, 1 at d = 17, 0 otherwise",
        run: claim_h1_m0_cochain_scan,
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_claim_and_tag_are_usage_errors() {
        let alg = Melikian::build();
        assert!(matches!(
            run_claim(&alg, "no-such-claim", Exec::Sequential),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            run_all(&alg, Some("no-such-tag"), Exec::Sequential),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn catalog_ids_are_unique_and_tagged() {
        let ids = claim_ids();
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        assert_eq!(
            tags(),
            vec!["structure", "cohomology", "squaring", "steps", "lemmas"]
        );
        for def in catalog() {
            assert!(!def.paper_ref.is_empty());
        }
    }

    #[test]
    fn corrupted_algebra_fails_the_structure_tag() {
        let alg = Melikian::build();
        // A grading-compatible perturbation: add a multiple of a generator
        // of the correct degree and weight to a bracket value, so only
        // Jacobi can notice.
        let i = 6; // x2D1, degree 0
        let j = 9; // x1, degree 1
        let bracket = alg.bracket_ids(i, j);
        assert!(!bracket.is_empty());
        let k = bracket[0].0;
        let bad = alg.with_perturbed_constant(i, j, k, F5::new(2));
        let reports = run_all(&bad, Some("structure"), Exec::Sequential).unwrap();
        let jac = reports.iter().find(|r| r.id == "jacobi").unwrap();
        assert!(!jac.passed(), "jacobi must catch a grading-compatible corruption");
        assert!(!structure_suite_ok(&bad));
    }

    #[test]
    fn invariant_cohomology_with_no_actors_is_plain_cohomology() {
        let alg = Melikian::build();
        let cx = Complex::new(
            dom(&alg, DegreePred::Eq(0), "m0").unwrap(),
            Coefficients::NegThree(&alg),
        )
        .unwrap();
        for r in 0..3 {
            let inv = invariant_cohomology(&cx, r, &[], Exec::Sequential).unwrap();
            assert_eq!(inv.total, h_total(&cx, r, Exec::Sequential));
        }
    }
}
