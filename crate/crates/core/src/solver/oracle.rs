use super::{BlockMethod, BlockReport, MdResult};
use crate::coloring::{EdgeColoring, Verifier};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default edge cap for [`brute_force_oracle`]: Bell(12) is about 4.2 million partitions.
pub const DEFAULT_ORACLE_CAP: usize = 12;

/// Exhaustive maximum over every set partition of the edge set.
///
/// Partitions are walked as restricted-growth strings in lexicographic
/// order with no pruning; only partitions with a larger palette than the best
/// so far are handed to the verifier. Returns the first maximum found.
pub fn brute_force_oracle(g: &Graph, cap: usize) -> Result<MdResult> {
    let m = g.m();
    if m > cap {
        return Err(Error::OracleCap { m, cap });
    }
    let mut verifier = Verifier::new(g);
    let mut best: Option<Vec<u32>> = None;
    let mut best_palette = 0u32;
    if m > 0 {
        // labels a[i] in 0.., prefix_max[i] = max(a[0..=i])
        let mut a = vec![0u32; m];
        let mut prefix_max = vec![0u32; m];
        let mut colors = vec![0u32; m];
        loop {
            let palette = prefix_max[m - 1] + 1;
            if palette > best_palette {
                for (c, &x) in colors.iter_mut().zip(&a) {
                    *c = x + 1;
                }
                if verifier.is_md(&colors, palette) {
                    best_palette = palette;
                    best = Some(colors.clone());
                }
            }
            // next restricted-growth string
            let Some(i) = (1..m).rev().find(|&i| a[i] <= prefix_max[i - 1]) else {
                break;
            };
            a[i] += 1;
            prefix_max[i] = prefix_max[i - 1].max(a[i]);
            for j in i + 1..m {
                a[j] = 0;
                prefix_max[j] = prefix_max[i];
            }
        }
    }
    let witness = EdgeColoring::from_canonical(best.unwrap_or_default());
    let value = best_palette as usize;
    Ok(MdResult {
        value,
        witness,
        blocks: vec![BlockReport {
            edges: (0..m).collect(),
            method: BlockMethod::BruteForce,
            value,
        }],
        bounds: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, complete_multipartite, cycle};

    #[test]
    fn known_values() {
        assert_eq!(brute_force_oracle(&cycle(6).unwrap(), 12).unwrap().value, 3);
        assert_eq!(brute_force_oracle(&complete(4), 12).unwrap().value, 1);
        let k23 = complete_multipartite(&[2, 3]).unwrap();
        assert_eq!(brute_force_oracle(&k23, 12).unwrap().value, 1);
    }

    #[test]
    fn enumerates_bell_many_partitions() {
        // edgeless 2-vertex graph aside, a 4-edge star is MD under every
        // partition; the oracle must reach the all-distinct one
        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let r = brute_force_oracle(&star, 12).unwrap();
        assert_eq!(r.value, 4);
        assert_eq!(r.witness.colors(), &[1, 2, 3, 4]);
    }

    #[test]
    fn cap_is_enforced() {
        let k6 = complete(6);
        assert!(matches!(
            brute_force_oracle(&k6, DEFAULT_ORACLE_CAP),
            Err(Error::OracleCap { m: 15, cap: 12 })
        ));
        assert_eq!(brute_force_oracle(&Graph::empty(1), 12).unwrap().value, 0);
    }
}
