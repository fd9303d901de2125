use super::{is_k4_minor_free, two_tree_completion, Homomorphism};
use crate::bound::{verify_certificate, PartialDistanceGraph};
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, odd_girth, Graph, LevelSets, Vertex};

/// Builds a homomorphism `g -> b` from a YES certificate.
///
/// Each component of `g` is completed to a 2-tree whose edges are weighted
/// by `min(d_g, k)`; the base edge goes to the first certificate edge of
/// its weight and every later vertex, attached to an already mapped edge
/// `ab`, goes to the smallest vertex joined by certificate edges of the
/// right weights to the images of `a` and `b`. The result is a weighted
/// homomorphism into the certificate, so base edges land on edges of `b`.
pub fn hom_via_certificate(g: &Graph, b: &Graph, pdg: &PartialDistanceGraph, k: u32) -> Result<Homomorphism> {
    if !is_k4_minor_free(g) {
        return Err(Error::PreconditionViolated("source graph has a K4 minor".into()));
    }
    if odd_girth(g).is_some_and(|l| l < 2 * k + 1) {
        return Err(Error::PreconditionViolated(format!(
            "source odd-girth is below {}",
            2 * k + 1
        )));
    }
    if !verify_certificate(b, pdg, k) {
        return Err(Error::PreconditionViolated("certificate does not verify".into()));
    }
    let levels = pdg.pruned_levels();
    let first = pdg.edges[0];
    let mut map = vec![first.u; g.n()];
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let sub = g.induced(&comp);
        let dist = all_pairs_distances(&sub);
        let w = |x: Vertex, y: Vertex| dist.get(x, y).min(k);
        let tt = two_tree_completion(&sub)?;
        let mut local = vec![usize::MAX; sub.n()];
        let (x0, x1) = tt.base_edge;
        let e0 = pdg
            .edges
            .iter()
            .find(|e| e.weight == w(x0, x1))
            .ok_or_else(|| Error::PreconditionViolated(format!("no certificate edge of weight {}", w(x0, x1))))?;
        local[x0] = e0.u;
        local[x1] = e0.v;
        for &(c, a, bb) in &tt.order {
            let sa = levels.level(local[a], w(c, a));
            let sb = levels.level(local[bb], w(c, bb));
            let z = match (sa, sb) {
                (Some(sa), Some(sb)) => sa.intersection(sb).next(),
                _ => None,
            };
            local[c] = z.ok_or_else(|| {
                Error::PreconditionViolated(format!(
                    "no image for vertex {} extending edge {}-{}",
                    comp[c], comp[a], comp[bb]
                ))
            })?;
        }
        for (i, &v) in comp.iter().enumerate() {
            map[v] = local[i];
        }
    }
    Ok(Homomorphism { map })
}
