use crate::graph::Cut;
use crate::reductions::{
    occurrence_labels, BaseLink, ReductionArtifact, ReductionError, ReductionKind, VertexRole,
};
use crate::sat::Assignment;

/// A colorful cut of the artifact's graph built from a satisfying (for NAE
/// artifacts, NAE-satisfying) assignment of the original formula.
pub fn assignment_to_cut(a: &ReductionArtifact, asg: &Assignment) -> Result<Cut, ReductionError> {
    if asg.var_count() != a.formula.var_count() {
        return Err(ReductionError::AssignmentSize {
            expected: a.formula.var_count(),
            got: asg.var_count(),
        });
    }
    let sides = if a.kind == ReductionKind::NaeCliques {
        if !a.formula.nae_satisfied_by(asg) {
            return Err(ReductionError::NotSatisfying("NAE-satisfy"));
        }
        nae_sides(a, asg)
    } else {
        if !a.formula.satisfied_by(asg) {
            return Err(ReductionError::NotSatisfying("satisfy"));
        }
        gadget_sides(a, asg)
    };
    let cut = Cut::new(sides)?;
    debug_assert!(a.graph.is_colorful(&cut)?);
    Ok(cut)
}

fn nae_sides(a: &ReductionArtifact, asg: &Assignment) -> Vec<bool> {
    let labels = occurrence_labels(&a.core);
    a.vertex_meaning
        .iter()
        .map(|role| match *role {
            VertexRole::Occurrence { clause, position } => {
                let occ = labels[clause - 1][position - 1];
                asg.value(occ.var) == occ.positive
            }
            VertexRole::PositiveHub { var } => !asg.value(var),
            VertexRole::NegativeHub { var } => asg.value(var),
            other => unreachable!("{other:?} in a NAE artifact"),
        })
        .collect()
}

/// In each clause triangle, the two corners of the first true literal's
/// edge go to S and the third corner to T. That literal's edge stays inside,
/// so every pair color has a false literal edge that crosses.
fn gadget_sides(a: &ReductionArtifact, asg: &Assignment) -> Vec<bool> {
    let Some(base) = a.base.as_deref() else {
        let mut sides = vec![true; a.graph.n()];
        for (clause, slot) in a.core.clauses().iter().zip(&a.slots) {
            let t = clause.iter().position(|l| l.eval(asg)).expect("clause satisfied");
            let corners = [slot[0].0, slot[0].1, slot[1].1];
            let (x, y) = slot[t];
            let third = corners.into_iter().find(|&c| c != x && c != y).unwrap();
            sides[third - 1] = false;
        }
        return sides;
    };

    let mut base_sides = gadget_sides(base, asg);
    if a.kind == ReductionKind::OctOne {
        for (gadget, slot) in base.slots.iter().enumerate() {
            if !base_sides[slot[0].0 - 1] {
                flip_gadget(&mut base_sides, &base.vertex_gadget, gadget);
            }
        }
    }
    let mut sides: Vec<bool> = a
        .base_links
        .iter()
        .map(|link| match *link {
            BaseLink::Same(v) => base_sides[v - 1],
            BaseLink::Opposite(v) => !base_sides[v - 1],
            BaseLink::Free => true,
        })
        .collect();
    if a.kind == ReductionKind::K4MinorFree {
        for (v, role) in a.vertex_meaning.iter().enumerate() {
            if let VertexRole::Tree { node } = role {
                sides[v] = node.ilog2() % 2 == 0;
            }
        }
        for (gadget, &i) in a.attach_edges.iter().enumerate() {
            let e = a.graph.edges()[i];
            if sides[e.u - 1] == sides[e.v - 1] {
                flip_gadget(&mut sides, &a.vertex_gadget, gadget);
            }
        }
    }
    sides
}

fn flip_gadget(sides: &mut [bool], gadget_of: &[Option<usize>], gadget: usize) {
    for (side, g) in sides.iter_mut().zip(gadget_of) {
        if *g == Some(gadget) {
            *side = !*side;
        }
    }
}

/// Reads an assignment off a colorful cut. For SAT-based artifacts a
/// variable is true iff one of its positive literal edges lies inside a
/// part; variables removed by preprocessing take their forced values. For
/// NAE artifacts a literal is true iff its occurrence vertex is in S.
pub fn cut_to_assignment(a: &ReductionArtifact, cut: &Cut) -> Result<Assignment, ReductionError> {
    if !a.graph.is_colorful(cut)? {
        return Err(ReductionError::NotColorful);
    }
    let labels = occurrence_labels(&a.core);
    let mut asg = Assignment::all_false(a.formula.var_count());
    if a.kind == ReductionKind::NaeCliques {
        for (ci, clause) in labels.iter().enumerate().rev() {
            for (t, occ) in clause.iter().enumerate().rev() {
                let v = 3 * ci + t + 1;
                asg.set(occ.var, cut.in_s(v) == occ.positive);
            }
        }
        if !a.formula.nae_satisfied_by(&asg) {
            return Err(ReductionError::NotSatisfying("NAE-satisfy"));
        }
        return Ok(asg);
    }
    for (clause, slot) in labels.iter().zip(&a.slots) {
        for (occ, &(x, y)) in clause.iter().zip(slot) {
            if occ.positive && cut.in_s(x) == cut.in_s(y) {
                asg.set(occ.var, true);
            }
        }
    }
    for &(var, value) in &a.forced {
        asg.set(var, value);
    }
    if !a.formula.satisfied_by(&asg) {
        return Err(ReductionError::NotSatisfying("satisfy"));
    }
    Ok(asg)
}
