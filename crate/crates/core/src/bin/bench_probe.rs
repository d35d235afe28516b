use ndarray::{Array1, Array2};
use ndarray_linalg::{Eig, Solve};
use num_complex::Complex64;
use std::time::Instant;

fn main() {
    for &n in &[1024usize, 2500] {
        let mut a: Array2<Complex64> = Array2::eye(n);
        for i in 0..n {
            for j in 0..n {
                let v = ((i * 31 + j * 17) % 97) as f64 / 97.0;
                a[[i, j]] += Complex64::new(v, -v * 0.5);
            }
        }
        let b: Array1<Complex64> = Array1::from_elem(n, Complex64::new(1.0, 0.0));
        let t = Instant::now();
        let x = a.solve(&b).unwrap();
        println!("zgesv n={n}: {:?} (x0={:.3e})", t.elapsed(), x[0].re);
    }
    let n = 1024usize;
    let mut a: Array2<Complex64> = Array2::eye(n);
    for i in 0..n {
        for j in 0..n {
            let v = ((i * 13 + j * 29) % 89) as f64 / 89.0;
            a[[i, j]] += Complex64::new(v, 0.1 * v);
        }
    }
    let t = Instant::now();
    let (ev, _vecs) = a.eig().unwrap();
    println!("zgeev n={n}: {:?} (ev0={:.3e})", t.elapsed(), ev[0].re);
}
