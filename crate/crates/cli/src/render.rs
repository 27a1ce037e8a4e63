//! Plain-text rendering of command results.

use std::fmt::Write;

use hirschkit::covering::PairObstruction;
use hirschkit::invariants::Obstruction;
use hirschkit::{
    CertificationReport, ClosureInfo, ConjugacyVerdict, CoveringDescriptor, Enumeration,
    ScreenReport, UnknotMove, UnknotVerdict,
};

fn letters(xs: &[i32]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn conjugacy(v: &ConjugacyVerdict) -> String {
    match v {
        ConjugacyVerdict::Conjugate { witness } => format!("conjugate\nwitness {witness}"),
        ConjugacyVerdict::NotConjugate => "not conjugate".to_string(),
        ConjugacyVerdict::Unknown { explored } => {
            format!("unknown (budget exhausted after {explored} summit elements)")
        }
    }
}

pub fn closure(info: &ClosureInfo) -> String {
    let mut s = format!("components {}\n", info.components);
    let cycles: Vec<String> = info
        .cycles
        .iter()
        .map(|c| format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")))
        .collect();
    writeln!(s, "strands {}", cycles.join(" ")).unwrap();
    writeln!(s, "axis linking {}", letters_usize(&info.axis_linking)).unwrap();
    s.push_str("linking matrix");
    for row in &info.linking_matrix {
        write!(s, "\n  {}", row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).unwrap();
    }
    s
}

fn letters_usize(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn obstruction(o: &Obstruction) -> String {
    match o {
        Obstruction::NotAKnot { components } => format!("closure has {components} components"),
        Obstruction::Alexander { polynomial } => format!("Alexander polynomial {polynomial}"),
        Obstruction::AlexanderGenus { lower } => format!("Alexander genus bound {lower}"),
        Obstruction::Bennequin { lower } => format!("Bennequin genus bound {lower}"),
    }
}

fn unknot_move(m: &UnknotMove) -> String {
    match m {
        UnknotMove::Conjugate { by } => format!("conjugate by {by}"),
        UnknotMove::FreeReduce => "free reduce".to_string(),
        UnknotMove::Rewrite { position, from, to } => {
            format!("rewrite at {position}: {} -> {}", letters(from), letters(to))
        }
        UnknotMove::Destabilize => "destabilize".to_string(),
    }
}

pub fn unknot(v: &UnknotVerdict) -> String {
    match v {
        UnknotVerdict::CertifiedUnknot { moves } => {
            let mut s = format!("unknot ({} moves)", moves.len());
            for m in moves {
                write!(s, "\n  {}", unknot_move(m)).unwrap();
            }
            s
        }
        UnknotVerdict::Obstructed { obstruction: o } => format!("knotted: {}", obstruction(o)),
        UnknotVerdict::Unknown { explored } => format!("unknown (explored {explored} words)"),
    }
}

pub fn cover(c: &CoveringDescriptor) -> String {
    format!(
        "degree {}\npsi(m2) {}\npsi(l1) {}\nlift of m degree {}\nlift of l1 degree {}",
        c.degree, c.psi_m2, c.psi_l1, c.lifted_m_degree, c.lifted_l1_degree
    )
}

fn screen_line(r: &ScreenReport) -> String {
    let status = if r.passes { "pass" } else { "fail" };
    let verdict = match &r.unknot_verdict {
        UnknotVerdict::CertifiedUnknot { .. } => "unknot certified".to_string(),
        UnknotVerdict::Obstructed { obstruction: o } => obstruction(o),
        UnknotVerdict::Unknown { .. } => "unknot unknown".to_string(),
    };
    format!("{status}  {}  [{verdict}]", r.candidate)
}

pub fn screen(r: &ScreenReport) -> String {
    format!(
        "{}\nknot closure {}\ntrivial Alexander {}\nBennequin lower bound zero {}\nconclusive {}",
        screen_line(r),
        r.knot_closure,
        r.alexander_trivial,
        r.bennequin_lower_zero,
        r.conclusive
    )
}

pub fn enumeration(e: &Enumeration) -> String {
    let mut s = format!(
        "{} classes, {} passing{}",
        e.reports.len(),
        e.passing().count(),
        if e.complete { "" } else { " (incomplete: budget exhausted)" }
    );
    for r in &e.reports {
        write!(s, "\n{}", screen_line(r)).unwrap();
    }
    s
}

pub fn certification(r: &CertificationReport) -> String {
    let mut s = format!("base braid {}\n", r.base_braid);
    s.push_str("q2   p  components  obstruction");
    for c in &r.pairs {
        let why = match &c.obstruction {
            Some(PairObstruction::Bennequin { lower }) => format!("Bennequin genus >= {lower}"),
            Some(PairObstruction::AlexanderGenus { lower }) => format!("Alexander genus >= {lower}"),
            Some(PairObstruction::NotAKnot { components }) => format!("link with {components} components"),
            None => "NONE".to_string(),
        };
        write!(s, "\n{:>2} {:>3}  {:>10}  {why}", c.q2, c.p, c.components).unwrap();
    }
    write!(
        s,
        "\n{}",
        if r.all_obstructed {
            format!("all {} pairs obstructed: not a Hirsch manifold in this range", r.pairs.len())
        } else {
            "some pairs are not obstructed".to_string()
        }
    )
    .unwrap();
    s
}
