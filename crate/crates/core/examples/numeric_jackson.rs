// Truncated Jackson series against the exact closed form, for q below and above 1.

use qbernoulli::exactq::{integer, rational};
use qbernoulli::verify::{numeric_jackson, NumericSample};
use qbernoulli::{QRat, Result, XPoly};

pub fn run_example() -> Result<()> {
    let t2 = XPoly::monomial(QRat::one(), 2);
    for q0 in [rational(1, 2), integer(2), rational(3, 2)] {
        let sample = NumericSample::new(q0.clone(), integer(0), integer(1), 200, 1e-10)?;
        let cmp = numeric_jackson(&t2, &sample)?;
        println!(
            "q = {q0} ({:?}): series {:.15}, closed form {:.15}, tail < {:.1e}",
            sample.branch(),
            cmp.series_value,
            cmp.closed_form_value,
            cmp.tail_bound
        );
        assert!(cmp.passes(sample.tolerance));
    }
    assert!(NumericSample::new(integer(1), integer(0), integer(1), 200, 1e-10).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
