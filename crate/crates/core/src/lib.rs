use ndarray::Array2;
use ndarray_linalg::{Eigh, Solve, Eig, UPLO};
use num_complex::Complex64;

pub fn probe() -> f64 {
    let h: Array2<Complex64> = Array2::eye(4);
    let (vals, _vecs) = h.eigh(UPLO::Lower).unwrap();
    let a: Array2<Complex64> = Array2::eye(3);
    let b = ndarray::Array1::from(vec![Complex64::new(1.0, 0.0); 3]);
    let x = a.solve(&b).unwrap();
    let (ev, _) = Array2::<Complex64>::eye(3).eig().unwrap();
    vals.sum() + x[0].re + ev[0].re
}
