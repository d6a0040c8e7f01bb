use std::fmt::Write;

use hkg_core::hkg::{HasseArfVerdict, JumpSequence};
use hkg_core::report::{InvariantReport, PolyBlock};
use hkg_core::StructuralCase;

const WIDTH: usize = 28;

fn row(out: &mut String, key: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "{key:<WIDTH$}{value}");
}

fn list<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn jumps(seq: &JumpSequence) -> String {
    list(&seq.values)
}

pub fn poly_blocks(out: &mut String, blocks: &[PolyBlock]) {
    for b in blocks {
        let m = b.basis.m;
        row(
            out,
            &format!("m = {m}: dimension"),
            format!("{} (expected {})", b.basis.dimension, b.basis.expected_dimension),
        );
        if let Some(poles) = &b.basis.pole_numbers {
            if poles.len() <= 40 {
                row(out, &format!("m = {m}: pole numbers"), list(poles));
            }
        }
        row(
            out,
            &format!("m = {m}: canonical degree"),
            format!("{} = {}", b.canonical_degree.from_jumps, b.canonical_degree.from_genus),
        );
        let ind = &b.indecomposability;
        row(
            out,
            &format!("m = {m}: summands N, N+1"),
            format!(
                "{}, {}{}",
                ind.summand_bound,
                ind.invariant_count,
                if ind.forced_indecomposable { " (indecomposable)" } else { "" }
            ),
        );
    }
}

pub fn report(r: &InvariantReport) -> String {
    let mut out = String::new();
    let d = &r.input;
    row(&mut out, "p", d.p());
    row(&mut out, "exponents", list(d.exponents()));
    row(&mut out, "lower jumps", list(d.lower_jumps()));
    for w in &r.validation.warnings {
        row(&mut out, "warning", format!("{}: {}", w.constraint, w.detail));
    }
    let s = &r.semigroup;
    row(&mut out, "generators", list(&s.generators));
    row(&mut out, "minimal generators", list(&s.minimal_generators));
    row(&mut out, "genus", &r.genus);
    row(&mut out, "frobenius", s.frobenius);
    row(&mut out, "conductor", format!("{} (Brauer {})", s.conductor, r.conductor_brauer));
    if let Some(gaps) = &s.gaps {
        if gaps.len() <= 40 {
            row(&mut out, "gaps", list(gaps));
        }
    }
    row(&mut out, "symmetric", yes(s.symmetric));
    row(
        &mut out,
        "telescopic",
        format!("{} (order {}; gcds {})", yes(s.telescopic), list(&s.telescopic_order), list(&s.gcd_tower)),
    );
    for level in &r.tower {
        row(
            &mut out,
            &format!("tower level {}", level.index),
            format!(
                "<{}> genus {} kernel {}{}",
                list(&level.minimal_generators),
                level.genus,
                level.kernel_order,
                if level.rational { " rational" } else { "" }
            ),
        );
    }
    row(&mut out, "different", &r.delta);
    let runs: Vec<String> = r
        .filtration
        .iter()
        .map(|run| match run.end {
            Some(e) => format!("{}..{}: {}", run.start, e, run.order),
            None => format!("{}..: {}", run.start, run.order),
        })
        .collect();
    row(&mut out, "filtration |G_i|", runs.join("; "));
    row(&mut out, "upper jumps", jumps(&r.upper_jumps));
    let ha = match r.hasse_arf.verdict {
        HasseArfVerdict::Vacuous => "single jump".to_string(),
        HasseArfVerdict::ConsistentWithAbelian => "all congruences hold".to_string(),
        HasseArfVerdict::NonAbelian => "congruence fails, group not abelian".to_string(),
    };
    row(&mut out, "hasse-arf", ha);
    poly_blocks(&mut out, &r.polydiff);
    let b = &r.big_action;
    row(
        &mut out,
        "big action",
        format!(
            "{} (first jump 1: {}, G_2 nontrivial: {})",
            yes(b.is_big),
            yes(b.first_jump_is_one),
            yes(b.second_group_nontrivial)
        ),
    );
    for m in &r.maximal_compat {
        row(
            &mut out,
            &format!("maximal over q = {}", m.q),
            format!(
                "q <= |G_1|: {}, q, q+1 poles: {}, m_r = q+1: {}",
                yes(m.within_group_order),
                yes(m.q_and_successor_are_poles),
                yes(m.last_jump_is_q_plus_one)
            ),
        );
    }
    row(&mut out, "p-rank", r.p_rank);
    row(&mut out, "deformation dimension", &r.deformation_dimension);
    row(&mut out, "oracle verified", yes(r.oracle_verified));
    out.push('\n');
    out.push_str(&narrative(r));
    out
}

fn narrative(r: &InvariantReport) -> String {
    let sc = &r.structural_case;
    let mut out = match sc.case {
        StructuralCase::D1 => String::from(
            "Case d1: the first lower jump is 1, so G_1(P) is strictly larger than G_2(P).\n",
        ),
        StructuralCase::D2 => String::from(
            "Case d2: the first lower jump exceeds 1, so G_1(P) = G_2(P).\n",
        ),
    };
    for c in &sc.claims {
        let _ = writeln!(
            out,
            "  [{}] {:?}: {}",
            if c.holds { "ok" } else { "FAILS" },
            c.claim,
            c.detail
        );
    }
    let w = &r.possible_jumps;
    let shown: Vec<String> = w
        .witnesses
        .iter()
        .map(|x| x.map_or("none".to_string(), |v| v.to_string()))
        .collect();
    let _ = writeln!(
        out,
        "  jumps as m_r - m_k with m_r = {}: witnesses {}",
        w.smallest_coprime_pole,
        shown.join(", ")
    );
    out
}
