use super::Graph;

/// Blocks (maximal pieces without a cut vertex) of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Edge ids of each block, sorted; blocks ordered by smallest edge id.
    pub blocks: Vec<Vec<usize>>,
    /// Sorted cut vertices.
    pub cut_vertices: Vec<usize>,
    /// `is_bridge[i]` iff block `i` is a single edge.
    pub is_bridge: Vec<bool>,
}

impl BlockDecomposition {
    /// Sorted vertex set of block `i`.
    pub fn block_vertices(&self, g: &Graph, i: usize) -> Vec<usize> {
        let mut vs: Vec<usize> = self.blocks[i]
            .iter()
            .flat_map(|&e| {
                let (u, v) = g.edge(e);
                [u, v]
            })
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

/// Lowpoint DFS over every component. Isolated vertices belong to no block.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut time = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    // (vertex, edge to parent, next incidence to scan)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        stack.push((root, UNSEEN, 0));
        while let Some(top) = stack.last_mut() {
            let (v, parent_edge) = (top.0, top.1);
            if top.2 < g.incident(v).len() {
                let (w, e) = g.incident(v)[top.2];
                top.2 += 1;
                if e == parent_edge {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    // back edge to an ancestor
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        if p != root {
                            is_cut[p] = true;
                        }
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == parent_edge {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }

    blocks.sort_unstable_by_key(|b| b[0]);
    let is_bridge = blocks.iter().map(|b| b.len() == 1).collect();
    BlockDecomposition {
        blocks,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
        is_bridge,
    }
}
