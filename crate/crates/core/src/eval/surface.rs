use std::io::Write;

use rayon::prelude::*;

use crate::datasets::GridSpec;
use crate::error::{Error, Result};
use crate::model::GridValues;

/// Writes `x1,x2,G` rows in row-major grid order (`x1` varies fastest).
pub fn export_surface<W: Write>(values: &GridValues, grid: &GridSpec, mut sink: W) -> Result<()> {
    if values.nx != grid.nx || values.ny != grid.ny || values.values.len() != grid.nx * grid.ny {
        return Err(Error::InvalidGrid(format!(
            "values are {}x{}, grid is {}x{}",
            values.nx, values.ny, grid.nx, grid.ny
        )));
    }
    let mut out = String::with_capacity(32 * values.values.len());
    out.push_str("x1,x2,G\n");
    for iy in 0..grid.ny {
        let y = grid.y(iy);
        for ix in 0..grid.nx {
            out.push_str(&format!("{},{},{}\n", grid.x(ix), y, values.get(ix, iy)));
        }
    }
    sink.write_all(out.as_bytes())?;
    sink.flush()?;
    Ok(())
}

/// A re-parsed surface export.
#[derive(Debug, Clone, PartialEq)]
pub struct Surface {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    pub values: GridValues,
}

pub fn parse_surface(text: &str) -> Result<Surface> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, "x1,x2,G")) => {}
        _ => return Err(Error::parse(1, "expected `x1,x2,G` header")),
    }
    let mut rows = Vec::new();
    for (i, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let cells: Vec<f64> = line
            .split(',')
            .map(|c| c.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::parse(i + 1, format!("bad row `{line}`")))?;
        if cells.len() != 3 {
            return Err(Error::parse(i + 1, "expected three columns"));
        }
        rows.push([cells[0], cells[1], cells[2]]);
    }
    if rows.is_empty() {
        return Err(Error::EmptyInput);
    }
    let y0 = rows[0][1];
    let nx = rows.iter().take_while(|r| r[1] == y0).count();
    if rows.len() % nx != 0 {
        return Err(Error::InvalidGrid("ragged surface".into()));
    }
    let ny = rows.len() / nx;
    let xs: Vec<f64> = rows[..nx].iter().map(|r| r[0]).collect();
    let ys: Vec<f64> = rows.iter().step_by(nx).map(|r| r[1]).collect();
    for (k, r) in rows.iter().enumerate() {
        if r[0] != xs[k % nx] || r[1] != ys[k / nx] {
            return Err(Error::InvalidGrid(format!("row {} is off the grid", k + 2)));
        }
    }
    Ok(Surface {
        xs,
        ys,
        values: GridValues {
            nx,
            ny,
            values: rows.iter().map(|r| r[2]).collect(),
        },
    })
}

/// Evaluates an arbitrary scalar function on the grid.
pub fn tabulate<F>(grid: &GridSpec, f: F) -> Result<GridValues>
where
    F: Fn(f64, f64) -> f64 + Sync,
{
    grid.validate()?;
    let values = (0..grid.ny)
        .into_par_iter()
        .flat_map_iter(|iy| {
            let y = grid.y(iy);
            let f = &f;
            (0..grid.nx).map(move |ix| f(grid.x(ix), y))
        })
        .collect();
    Ok(GridValues {
        nx: grid.nx,
        ny: grid.ny,
        values,
    })
}

/// Number of 4-connected regions of strictly positive and strictly negative
/// values. Zero nodes belong to neither.
pub fn sign_regions(values: &GridValues) -> (usize, usize) {
    let (nx, ny) = (values.nx, values.ny);
    let sign = |k: usize| {
        let v = values.values[k];
        if v > 0.0 {
            1
        } else if v < 0.0 {
            -1
        } else {
            0
        }
    };
    let mut seen = vec![false; nx * ny];
    let mut counts = (0, 0);
    let mut stack = Vec::new();
    for start in 0..nx * ny {
        let s = sign(start);
        if s == 0 || seen[start] {
            continue;
        }
        if s > 0 {
            counts.0 += 1;
        } else {
            counts.1 += 1;
        }
        seen[start] = true;
        stack.push(start);
        while let Some(k) = stack.pop() {
            let (ix, iy) = (k % nx, k / nx);
            let mut visit = |n: usize| {
                if !seen[n] && sign(n) == s {
                    seen[n] = true;
                    stack.push(n);
                }
            };
            if ix > 0 {
                visit(k - 1);
            }
            if ix + 1 < nx {
                visit(k + 1);
            }
            if iy > 0 {
                visit(k - nx);
            }
            if iy + 1 < ny {
                visit(k + nx);
            }
        }
    }
    counts
}

/// Whether `G` changes sign (or touches zero) along some grid edge.
pub fn has_zero_crossing(values: &GridValues) -> bool {
    let (nx, ny) = (values.nx, values.ny);
    let crosses = |a: f64, b: f64| a * b <= 0.0;
    (0..ny).any(|iy| {
        (0..nx).any(|ix| {
            let v = values.get(ix, iy);
            (ix + 1 < nx && crosses(v, values.get(ix + 1, iy)))
                || (iy + 1 < ny && crosses(v, values.get(ix, iy + 1)))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(nx: usize, ny: usize) -> GridSpec {
        GridSpec::new(-1.0, 1.0, -1.0, 1.0, nx, ny).unwrap()
    }

    #[test]
    fn two_by_two_has_four_rows() {
        let g = grid(2, 2);
        let v = tabulate(&g, |x, y| x * y).unwrap();
        let mut buf = Vec::new();
        export_surface(&v, &g, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "x1,x2,G\n-1,-1,1\n1,-1,-1\n-1,1,-1\n1,1,1\n");
    }

    #[test]
    fn round_trip() {
        let g = GridSpec::new(0.0, 3.0, -2.0, 0.5, 7, 4).unwrap();
        let v = tabulate(&g, |x, y| (x - y).sin() / 3.0).unwrap();
        let mut buf = Vec::new();
        export_surface(&v, &g, &mut buf).unwrap();
        let s = parse_surface(std::str::from_utf8(&buf).unwrap()).unwrap();
        assert_eq!(s.values, v);
        assert_eq!(s.xs.len(), 7);
        assert_eq!(s.ys.len(), 4);
    }

    #[test]
    fn shape_mismatch() {
        let v = tabulate(&grid(3, 3), |_, _| 0.0).unwrap();
        assert!(export_surface(&v, &grid(3, 4), Vec::new()).is_err());
    }

    #[test]
    fn quadrants() {
        let v = tabulate(&grid(21, 21), |x, y| -x * y).unwrap();
        assert_eq!(sign_regions(&v), (2, 2));
        assert!(has_zero_crossing(&v));
        let flat = tabulate(&grid(5, 5), |_, _| 1.0).unwrap();
        assert_eq!(sign_regions(&flat), (1, 0));
        assert!(!has_zero_crossing(&flat));
    }

    #[test]
    fn parse_errors() {
        assert!(parse_surface("a,b,c\n").is_err());
        assert!(parse_surface("x1,x2,G\n").is_err());
        assert!(parse_surface("x1,x2,G\n0,0,1\n1,0\n").is_err());
    }
}
