mod common;

use committee_core::format::{parse_instance, write_instance};
use committee_core::graph::Graph;
use committee_core::oracle::{brute_force, brute_force_phs};
use committee_core::reductions::{
    ccav_phs_convert, has_independent_set, has_partial_cover, has_vertex_cover, has_vertex_deletion, ids_to_ccav,
    mvs_to_pav, parse_phs, pvc_to_ccav, random_graph, random_regular_graph, regular_degree, vc_to_mav, write_phs,
    PhsPayload,
};
use committee_core::{Instance, Rational, Rule};
use rand::Rng;

fn graphs(seed: u64, count: usize) -> Vec<Graph> {
    let mut rng = common::rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=10);
            let p = rng.gen_range(0.1..0.9);
            random_graph(n, p, &mut rng)
        })
        .collect()
}

fn edge_votes(g: &Graph, inst: &Instance) {
    assert_eq!(inst.election.m(), g.n());
    assert_eq!(inst.election.n(), g.edge_count());
    assert!(inst.election.votes().iter().all(|v| v.len() == 2));
}

fn oracle(inst: &Instance) -> bool {
    brute_force(inst).unwrap().decision
}

#[test]
fn vertex_cover_equivalence() {
    let mut rng = common::rng(41);
    for g in graphs(40, 200) {
        let kappa = rng.gen_range(0..=g.n());
        let inst = vc_to_mav(&g, kappa).unwrap();
        edge_votes(&g, &inst);
        assert_eq!(oracle(&inst), has_vertex_cover(&g, kappa), "{g:?} kappa={kappa}");
    }
}

#[test]
fn independent_set_equivalence() {
    let mut rng = common::rng(43);
    for g in graphs(42, 200) {
        let kappa = rng.gen_range(0..=g.n());
        let inst = ids_to_ccav(&g, kappa).unwrap();
        edge_votes(&g, &inst);
        assert_eq!(oracle(&inst), has_independent_set(&g, kappa), "{g:?} kappa={kappa}");
    }
}

#[test]
fn vertex_deletion_equivalence() {
    let mut rng = common::rng(44);
    let mut done = 0;
    while done < 200 {
        let n = rng.gen_range(2..=10);
        let r = rng.gen_range(0..n);
        let Ok(g) = random_regular_graph(n, r, &mut rng) else { continue };
        done += 1;
        let kappa = rng.gen_range(0..n);
        let ell = rng.gen_range(0..=g.edge_count());
        let inst = mvs_to_pav(&g, kappa, ell).unwrap();
        edge_votes(&g, &inst);
        assert_eq!(regular_degree(&g), Some(r));
        let expected = Rational::from((n - kappa) * r) - Rational::new(ell as i128, 2);
        assert_eq!(inst.d, expected);
        assert_eq!(inst.k, n - kappa);
        assert_eq!(oracle(&inst), has_vertex_deletion(&g, kappa, ell), "{g:?} kappa={kappa} ell={ell}");
    }
}

#[test]
fn partial_cover_equivalence() {
    let mut rng = common::rng(46);
    for g in graphs(45, 200) {
        let kappa = rng.gen_range(0..=g.n());
        let ell = rng.gen_range(0..=g.edge_count() + 1);
        let inst = pvc_to_ccav(&g, kappa, ell).unwrap();
        edge_votes(&g, &inst);
        assert_eq!(oracle(&inst), has_partial_cover(&g, kappa, ell), "{g:?} kappa={kappa} ell={ell}");
    }
}

#[test]
fn hitting_set_bridge() {
    let mut rng = common::rng(47);
    for _ in 0..500 {
        let e = common::election(&mut rng, 8, 7, None, None);
        let k = rng.gen_range(0..=e.m());
        let d = rng.gen_range(0..=e.n() + 1);
        let inst = Instance::new(e, Rule::Ccav, k, Rational::from(d)).unwrap();
        let PhsPayload::Phs(p) = ccav_phs_convert(&PhsPayload::Ccav(inst.clone())).unwrap() else {
            panic!("expected a hitting set instance");
        };
        assert_eq!(brute_force_phs(p.universe, &p.sets, p.a, p.b).unwrap(), oracle(&inst));
        assert_eq!(parse_phs(&write_phs(&p)).unwrap(), p);
        assert_eq!(ccav_phs_convert(&PhsPayload::Phs(p)).unwrap(), PhsPayload::Ccav(inst.clone()));
        assert_eq!(parse_instance(&write_instance(&inst)).unwrap(), inst);
    }
}
