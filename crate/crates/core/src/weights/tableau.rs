use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Filling of a Young diagram, rows listed top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct Tableau {
    shape: Vec<usize>,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Row lengths must form a partition (weakly decreasing, positive).
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        check_partition(&shape)?;
        Ok(Tableau { shape, rows })
    }

    pub fn empty() -> Self {
        Tableau {
            shape: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn cells(&self) -> usize {
        self.shape.iter().sum()
    }
}

impl TryFrom<Vec<Vec<u32>>> for Tableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<u32>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

fn check_partition(shape: &[usize]) -> Result<()> {
    if shape.contains(&0) {
        return Err(Error::MalformedShape(format!(
            "empty row in shape {shape:?}"
        )));
    }
    if shape.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::MalformedShape(format!(
            "row lengths {shape:?} increase"
        )));
    }
    Ok(())
}

/// Rows weakly increase, columns strictly increase.
pub fn is_semistandard(t: &Tableau) -> bool {
    let rows_ok = t
        .rows
        .iter()
        .all(|row| row.windows(2).all(|w| w[0] <= w[1]));
    let cols_ok = t.rows.windows(2).all(|pair| {
        pair[1]
            .iter()
            .zip(&pair[0])
            .all(|(below, above)| below > above)
    });
    rows_ok && cols_ok
}

/// Occurrence counts of the values `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn new(counts: Vec<i64>) -> Self {
        WeightVector(counts)
    }

    pub fn counts(&self) -> &[i64] {
        &self.0
    }
}

pub fn weight_of_tableau(t: &Tableau, n: usize) -> Result<WeightVector> {
    let mut counts = vec![0i64; n];
    for &entry in t.rows.iter().flatten() {
        if entry < 1 || entry as usize > n {
            return Err(Error::EntryOutOfRange { entry, max: n });
        }
        counts[entry as usize - 1] += 1;
    }
    Ok(WeightVector(counts))
}

/// All semistandard tableaux of the given shape with entries in `1..=n`,
/// ordered lexicographically by their row-major reading word.
pub fn enumerate_ssyt(shape: &[usize], n: usize) -> Result<Vec<Tableau>> {
    check_partition(shape)?;
    if shape.len() > n {
        return Err(Error::TooManyRows {
            rows: shape.len(),
            max: n,
        });
    }
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
        .collect();
    let mut rows: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::new();
    fill(&cells, 0, n as u32, &mut rows, &mut out);
    Ok(out)
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    n: u32,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<Tableau>,
) {
    let Some(&(i, j)) = cells.get(k) else {
        out.push(Tableau::new(rows.clone()).expect("shape already checked"));
        return;
    };
    let left = if j > 0 { rows[i][j - 1] } else { 1 };
    let above = if i > 0 { rows[i - 1][j] + 1 } else { 1 };
    for v in left.max(above)..=n {
        rows[i][j] = v;
        fill(cells, k + 1, n, rows, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Tableau {
        Tableau::new(vec![vec![1, 2, 2, 4], vec![2, 3], vec![3], vec![4]]).unwrap()
    }

    #[test]
    fn example_tableau() {
        let t = example();
        assert_eq!(t.shape(), &[4, 2, 1, 1]);
        assert!(is_semistandard(&t));
        assert_eq!(weight_of_tableau(&t, 4).unwrap().counts(), &[1, 3, 2, 2]);
    }

    #[test]
    fn semistandard_examples() {
        assert!(is_semistandard(&Tableau::new(vec![vec![1, 1, 2]]).unwrap()));
        assert!(!is_semistandard(
            &Tableau::new(vec![vec![2], vec![2]]).unwrap()
        ));
        assert!(!is_semistandard(&Tableau::new(vec![vec![2, 1]]).unwrap()));
        assert!(matches!(
            Tableau::new(vec![vec![1], vec![1, 2]]),
            Err(Error::MalformedShape(_))
        ));
        assert!(matches!(
            Tableau::new(vec![vec![]]),
            Err(Error::MalformedShape(_))
        ));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(
            weight_of_tableau(&Tableau::empty(), 3).unwrap().counts(),
            &[0, 0, 0]
        );
        let row = Tableau::new(vec![vec![1, 2, 3]]).unwrap();
        assert_eq!(weight_of_tableau(&row, 3).unwrap().counts(), &[1, 1, 1]);
        assert_eq!(
            weight_of_tableau(&row, 2),
            Err(Error::EntryOutOfRange { entry: 3, max: 2 })
        );
    }

    /// Every filling with entries in `1..=n`, filtered by `is_semistandard`.
    fn brute_force(shape: &[usize], n: u32) -> Vec<Tableau> {
        let cells: usize = shape.iter().sum();
        let total = (n as usize).pow(cells as u32);
        let mut out = Vec::new();
        for mut code in 0..total {
            let mut word = Vec::with_capacity(cells);
            for _ in 0..cells {
                word.push((code % n as usize) as u32 + 1);
                code /= n as usize;
            }
            word.reverse();
            let mut it = word.into_iter();
            let rows = shape
                .iter()
                .map(|&len| it.by_ref().take(len).collect())
                .collect();
            let t = Tableau::new(rows).unwrap();
            if is_semistandard(&t) {
                out.push(t);
            }
        }
        out
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_ssyt(&[1], 3).unwrap().len(), 3);
        assert_eq!(enumerate_ssyt(&[2, 1], 3).unwrap().len(), 8);
        let col = enumerate_ssyt(&[1, 1, 1], 3).unwrap();
        assert_eq!(
            col,
            vec![Tableau::new(vec![vec![1], vec![2], vec![3]]).unwrap()]
        );
        assert_eq!(
            enumerate_ssyt(&[1, 1], 1),
            Err(Error::TooManyRows { rows: 2, max: 1 })
        );
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (shape, n) in [
            (vec![2, 1], 3),
            (vec![2, 2], 3),
            (vec![3, 1], 3),
            (vec![2, 1, 1], 4),
        ] {
            assert_eq!(
                enumerate_ssyt(&shape, n as usize).unwrap(),
                brute_force(&shape, n),
                "{shape:?}"
            );
        }
    }
}
