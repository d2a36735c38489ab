use num_complex::Complex64;

/// `exp(2πi·num/den)`, exact at quarter turns.
pub fn unit_root(num: i64, den: u64) -> Complex64 {
    assert!(den > 0, "root of unity needs a positive order");
    let r = num.rem_euclid(den as i64) as u64;
    if (4 * r) % den == 0 {
        return match 4 * r / den {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    Complex64::from_polar(1.0, std::f64::consts::TAU * r as f64 / den as f64)
}

/// `i^k`.
pub fn i_pow(k: u32) -> Complex64 {
    unit_root(k as i64, 4)
}

/// Neumaier-compensated accumulator, applied to real and imaginary parts separately.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: Complex64,
    carry: Complex64,
}

fn neumaier_step(sum: &mut f64, carry: &mut f64, x: f64) {
    let t = *sum + x;
    if sum.abs() >= x.abs() {
        *carry += (*sum - t) + x;
    } else {
        *carry += (x - t) + *sum;
    }
    *sum = t;
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, z: Complex64) {
        neumaier_step(&mut self.sum.re, &mut self.carry.re, z.re);
        neumaier_step(&mut self.sum.im, &mut self.carry.im, z.im);
    }

    pub fn value(&self) -> Complex64 {
        self.sum + self.carry
    }
}

impl FromIterator<Complex64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = Complex64>>(iter: I) -> Self {
        let mut acc = Self::new();
        for z in iter {
            acc.add(z);
        }
        acc
    }
}

pub fn compensated_sum<I: IntoIterator<Item = Complex64>>(iter: I) -> Complex64 {
    iter.into_iter().collect::<CompensatedSum>().value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_turns_are_exact() {
        assert_eq!(unit_root(1, 4), Complex64::new(0.0, 1.0));
        assert_eq!(unit_root(-1, 2), Complex64::new(-1.0, 0.0));
        assert_eq!(unit_root(6, 8), Complex64::new(0.0, -1.0));
        assert!((unit_root(1, 3) - Complex64::new(-0.5, 3f64.sqrt() / 2.0)).norm() < 1e-15);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in 2..200u64 {
            let s = compensated_sum((0..n).map(|k| unit_root(k as i64, n)));
            assert!(s.norm() < 1e-12, "n={n}: {s}");
        }
    }

    #[test]
    fn compensation_recovers_small_terms() {
        let terms = [
            Complex64::new(1e16, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(-1e16, 0.0),
        ];
        assert_eq!(compensated_sum(terms).re, 1.0);
    }
}
