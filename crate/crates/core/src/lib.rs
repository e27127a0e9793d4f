pub fn probe() -> f64 {
    use nalgebra::DMatrix;
    use num_complex::Complex64;
    let m = DMatrix::<Complex64>::from_row_slice(2, 2, &[
        Complex64::new(1.0, 0.0), Complex64::new(0.0, -1.0),
        Complex64::new(0.0, 1.0), Complex64::new(1.0, 0.0),
    ]);
    let eig = m.symmetric_eigen();
    eig.eigenvalues.iter().cloned().fold(f64::MIN, f64::max)
}
