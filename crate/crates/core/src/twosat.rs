//! 2-SAT over an implication graph, with the strongly connected components
//! exposed so callers can ask reachability questions.

/// Literal `2v` is "v true", `2v + 1` is "v false".
pub(crate) type Lit = usize;

#[inline]
pub(crate) fn pos(v: usize) -> Lit {
    2 * v
}

#[inline]
pub(crate) fn neg(l: Lit) -> Lit {
    l ^ 1
}

pub(crate) struct TwoSat {
    imp: Vec<Vec<Lit>>,
}

pub(crate) struct Scc {
    /// Component of each literal; components are numbered sinks first.
    pub comp: Vec<usize>,
    pub count: usize,
}

impl TwoSat {
    pub fn new(vars: usize) -> Self {
        TwoSat { imp: vec![Vec::new(); 2 * vars] }
    }

    pub fn vars(&self) -> usize {
        self.imp.len() / 2
    }

    /// a ∨ b
    pub fn clause(&mut self, a: Lit, b: Lit) {
        self.imp[neg(a)].push(b);
        self.imp[neg(b)].push(a);
    }

    pub fn unit(&mut self, a: Lit) {
        self.imp[neg(a)].push(a);
    }

    pub fn successors(&self, l: Lit) -> &[Lit] {
        &self.imp[l]
    }

    /// Iterative Tarjan.
    pub fn scc(&self) -> Scc {
        let n = self.imp.len();
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut on = vec![false; n];
        let mut comp = vec![usize::MAX; n];
        let mut stack = Vec::new();
        let mut call: Vec<(usize, usize)> = Vec::new();
        let mut next = 0;
        let mut count = 0;
        for s in 0..n {
            if index[s] != usize::MAX {
                continue;
            }
            call.push((s, 0));
            index[s] = next;
            low[s] = next;
            next += 1;
            stack.push(s);
            on[s] = true;
            while let Some(&mut (v, ref mut k)) = call.last_mut() {
                if *k < self.imp[v].len() {
                    let w = self.imp[v][*k];
                    *k += 1;
                    if index[w] == usize::MAX {
                        index[w] = next;
                        low[w] = next;
                        next += 1;
                        stack.push(w);
                        on[w] = true;
                        call.push((w, 0));
                    } else if on[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    call.pop();
                    if let Some(&(p, _)) = call.last() {
                        low[p] = low[p].min(low[v]);
                    }
                    if low[v] == index[v] {
                        loop {
                            let w = stack.pop().unwrap();
                            on[w] = false;
                            comp[w] = count;
                            if w == v {
                                break;
                            }
                        }
                        count += 1;
                    }
                }
            }
        }
        Scc { comp, count }
    }

    /// A satisfying assignment, or `None`.
    pub fn solve(&self) -> Option<Vec<bool>> {
        let scc = self.scc();
        (0..self.vars())
            .map(|v| {
                let (t, f) = (scc.comp[pos(v)], scc.comp[neg(pos(v))]);
                // components are numbered sinks first; pick the side nearer the sinks
                (t != f).then_some(t < f)
            })
            .collect()
    }
}
