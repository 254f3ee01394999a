//! Smith normal form over the integers, tracking column transforms.
//!
//! Only the right transform is kept: for a relation matrix `R` (rows are
//! relations) we get `U R V = D`, and the rows of `V^{-1}` express the new
//! cyclic generators in terms of the old ones.

#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diagonal: Vec<i128>,
    pub v: Vec<Vec<i128>>,
    pub v_inverse: Vec<Vec<i128>>,
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

struct Calc<'a> {
    a: &'a mut Vec<Vec<i128>>,
    rows: usize,
    cols: usize,
    v: Vec<Vec<i128>>,
    vinv: Vec<Vec<i128>>,
}

impl Calc<'_> {
    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
        for row in self.v.iter_mut() {
            row.swap(i, j);
        }
        self.vinv.swap(i, j);
    }

    /// col_j += k * col_i
    fn add_col(&mut self, i: usize, j: usize, k: i128) {
        if k == 0 {
            return;
        }
        for row in self.a.iter_mut() {
            row[j] += k * row[i];
        }
        for row in self.v.iter_mut() {
            row[j] += k * row[i];
        }
        // inverse transform: row_i -= k * row_j
        let rj = self.vinv[j].clone();
        for (x, y) in self.vinv[i].iter_mut().zip(rj) {
            *x -= k * y;
        }
    }

    fn negate_col(&mut self, i: usize) {
        for row in self.a.iter_mut() {
            row[i] = -row[i];
        }
        for row in self.v.iter_mut() {
            row[i] = -row[i];
        }
        for x in self.vinv[i].iter_mut() {
            *x = -*x;
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
    }

    /// row_j += k * row_i
    fn add_row(&mut self, i: usize, j: usize, k: i128) {
        if k == 0 {
            return;
        }
        let ri = self.a[i].clone();
        for (x, y) in self.a[j].iter_mut().zip(ri) {
            *x += k * y;
        }
    }

    fn min_nonzero(&self, p: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in p..self.rows {
            for j in p..self.cols {
                let x = self.a[i][j];
                if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < self.a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn run(&mut self) {
        let n = self.rows.min(self.cols);
        for p in 0..n {
            loop {
                let Some((i, j)) = self.min_nonzero(p) else {
                    return;
                };
                self.swap_rows(p, i);
                self.swap_cols(p, j);
                let pivot = self.a[p][p];
                let mut clean = true;
                for r in p + 1..self.rows {
                    let q = self.a[r][p].div_euclid(pivot);
                    self.add_row(p, r, -q);
                    if self.a[r][p] != 0 {
                        clean = false;
                    }
                }
                for c in p + 1..self.cols {
                    let q = self.a[p][c].div_euclid(pivot);
                    self.add_col(p, c, -q);
                    if self.a[p][c] != 0 {
                        clean = false;
                    }
                }
                if !clean {
                    continue;
                }
                // divisibility of the remaining block
                let mut offender = None;
                'scan: for r in p + 1..self.rows {
                    for c in p + 1..self.cols {
                        if self.a[r][c] % pivot != 0 {
                            offender = Some(r);
                            break 'scan;
                        }
                    }
                }
                match offender {
                    Some(r) => self.add_row(r, p, 1),
                    None => break,
                }
            }
            if self.a[p][p] < 0 {
                self.negate_col(p);
            }
        }
    }
}

/// Reduces `matrix` in place to Smith normal form.
pub fn smith_normal_form(matrix: &mut Vec<Vec<i128>>) -> SmithForm {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let mut calc = Calc {
        a: matrix,
        rows,
        cols,
        v: identity(cols),
        vinv: identity(cols),
    };
    calc.run();
    let diagonal = (0..rows.min(cols)).map(|i| calc.a[i][i]).collect();
    SmithForm {
        diagonal,
        v: calc.v,
        v_inverse: calc.vinv,
    }
}
