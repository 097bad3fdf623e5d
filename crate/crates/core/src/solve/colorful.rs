use crate::graph::{ColoredGraph, Cut, GraphError};
use crate::sat::{dpll_solve, Assignment, CnfFormula, Lit};
use crate::solve::SolveError;

/// CNF whose models are the bipartitions cutting every color.
///
/// Variable `x_v` is true when `v` lies in S. Each edge `e = {u, v}` gets a
/// crossing indicator `z_e <-> (x_u xor x_v)`, every color needs one true
/// indicator, and two blocking clauses rule out the all-S and all-T
/// placements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorfulEncoding {
    pub formula: CnfFormula,
    /// `vertex_var[v - 1]` is the variable of vertex `v`.
    pub vertex_var: Vec<usize>,
    /// `aux_var[i]` is the crossing indicator of edge `i`.
    pub aux_var: Vec<usize>,
}

impl ColorfulEncoding {
    pub fn decode(&self, asg: &Assignment) -> Result<Cut, GraphError> {
        Cut::new(self.vertex_var.iter().map(|&x| asg.value(x)).collect())
    }
}

pub fn encode_colorful_to_cnf(g: &ColoredGraph) -> Result<ColorfulEncoding, SolveError> {
    let n = g.n();
    if n < 2 {
        return Err(GraphError::TooFewVertices { n }.into());
    }
    if g.p() == 0 {
        return Err(SolveError::NoColors);
    }
    let vertex_var: Vec<usize> = (1..=n).collect();
    let aux_var: Vec<usize> = (0..g.m()).map(|i| n + 1 + i).collect();

    let mut clauses = Vec::with_capacity(4 * g.m() + g.p() + 2);
    for (e, &z) in g.edges().iter().zip(&aux_var) {
        let (xu, xv) = (vertex_var[e.u - 1], vertex_var[e.v - 1]);
        clauses.push(vec![Lit::neg(z), Lit::pos(xu), Lit::pos(xv)]);
        clauses.push(vec![Lit::neg(z), Lit::neg(xu), Lit::neg(xv)]);
        clauses.push(vec![Lit::pos(z), Lit::neg(xu), Lit::pos(xv)]);
        clauses.push(vec![Lit::pos(z), Lit::pos(xu), Lit::neg(xv)]);
    }
    for class in g.color_classes() {
        clauses.push(class.iter().map(|&i| Lit::pos(aux_var[i])).collect());
    }
    clauses.push(vertex_var.iter().map(|&x| Lit::pos(x)).collect());
    clauses.push(vertex_var.iter().map(|&x| Lit::neg(x)).collect());

    let formula = CnfFormula::new(n + g.m(), clauses).expect("encoding stays in range");
    Ok(ColorfulEncoding {
        formula,
        vertex_var,
        aux_var,
    })
}

/// A cut using all `p` colors, if one exists, found through DPLL.
pub fn colorful_cut_decide(g: &ColoredGraph) -> Result<Option<Cut>, SolveError> {
    let n = g.n();
    if n < 2 {
        return Err(GraphError::TooFewVertices { n }.into());
    }
    if g.p() == 0 {
        return Ok(Some(Cut::from_s_side(n, &[1])?));
    }
    let g = g.dedup();
    let enc = encode_colorful_to_cnf(&g)?;
    let Some(model) = dpll_solve(&enc.formula) else {
        return Ok(None);
    };
    let cut = enc.decode(&model)?;
    debug_assert!(g.is_colorful(&cut)?);
    Ok(Some(cut))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn g(n: usize, edges: &[(usize, usize, usize)]) -> ColoredGraph {
        ColoredGraph::from_edges(n, edges.iter().map(|&(u, v, c)| Edge::new(u, v, c)).collect())
            .unwrap()
    }

    #[test]
    fn single_edge_encoding_shape() {
        let enc = encode_colorful_to_cnf(&g(2, &[(1, 2, 1)])).unwrap();
        assert_eq!(enc.formula.var_count(), 3);
        assert_eq!(enc.formula.clauses().len(), 4 + 1 + 2);
        assert!(dpll_solve(&enc.formula).is_some());
    }

    #[test]
    fn rainbow_triangle_is_unsat() {
        let t = g(3, &[(1, 2, 1), (2, 3, 2), (1, 3, 3)]);
        let enc = encode_colorful_to_cnf(&t).unwrap();
        assert_eq!(dpll_solve(&enc.formula), None);
        assert_eq!(colorful_cut_decide(&t).unwrap(), None);
    }

    #[test]
    fn rainbow_c4_decodes_to_alternating_cut() {
        let c4 = g(4, &[(1, 2, 1), (2, 3, 2), (3, 4, 3), (4, 1, 4)]);
        let cut = colorful_cut_decide(&c4).unwrap().unwrap();
        assert!(c4.is_colorful(&cut).unwrap());
        let s = cut.s_side();
        assert!(s == vec![1, 3] || s == vec![2, 4]);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(matches!(
            encode_colorful_to_cnf(&ColoredGraph::edgeless(3)),
            Err(SolveError::NoColors)
        ));
        assert!(colorful_cut_decide(&ColoredGraph::edgeless(3)).unwrap().is_some());
        assert!(colorful_cut_decide(&ColoredGraph::edgeless(1)).is_err());
    }

    #[test]
    fn dimacs_export_parses_back() {
        let enc = encode_colorful_to_cnf(&g(2, &[(1, 2, 1)])).unwrap();
        let text = enc.formula.to_dimacs();
        assert!(text.starts_with("p cnf 3 7\n"));
        assert_eq!(crate::sat::parse_dimacs(&text).unwrap(), enc.formula);
    }
}
