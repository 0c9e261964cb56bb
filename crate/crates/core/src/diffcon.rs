//! Systems of difference constraints `x_v - x_u <= c`.
//!
//! Each constraint becomes an edge `u -> v` of weight `c`; the system is
//! feasible iff that graph has no negative cycle, in which case shortest path
//! distances from a virtual source joined to every variable by a zero edge
//! are a solution. With integer bounds the solution is integral.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Constraint {
    from: usize,
    to: usize,
    bound: i64,
}

#[derive(Debug, Clone, Default)]
pub struct DifferenceConstraints {
    variables: usize,
    constraints: Vec<Constraint>,
}

impl DifferenceConstraints {
    pub fn new(variables: usize) -> Self {
        DifferenceConstraints {
            variables,
            constraints: Vec::new(),
        }
    }

    pub fn variables(&self) -> usize {
        self.variables
    }

    /// Adds `x[to] - x[from] <= bound`.
    pub fn add(&mut self, from: usize, to: usize, bound: i64) {
        assert!(
            from < self.variables && to < self.variables,
            "constraint references variable outside 0..{}",
            self.variables
        );
        self.constraints.push(Constraint { from, to, bound });
    }

    /// Adds `lower <= x[to] - x[from] <= upper`.
    pub fn add_range(&mut self, from: usize, to: usize, lower: i64, upper: i64) {
        self.add(from, to, upper);
        self.add(to, from, -lower);
    }

    /// Bellman-Ford from the virtual source. Returns `None` when a negative
    /// cycle makes the system infeasible. Every returned value is `<= 0`.
    pub fn solve(&self) -> Option<Vec<i64>> {
        let mut dist = vec![0i64; self.variables];
        // With the virtual source the graph has variables + 1 nodes, so a
        // feasible system settles within `variables` full passes.
        for _ in 0..=self.variables {
            let mut changed = false;
            for c in &self.constraints {
                let candidate = dist[c.from] + c.bound;
                if candidate < dist[c.to] {
                    dist[c.to] = candidate;
                    changed = true;
                }
            }
            if !changed {
                return Some(dist);
            }
        }
        None
    }

    /// Checks an assignment against every constraint.
    pub fn satisfied_by(&self, values: &[i64]) -> bool {
        values.len() == self.variables
            && self
                .constraints
                .iter()
                .all(|c| values[c.to] - values[c.from] <= c.bound)
    }
}
