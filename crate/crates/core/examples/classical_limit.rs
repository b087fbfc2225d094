// The q -> 1 limit recovers the classical Bernoulli polynomials.

use qbernoulli::bernoulli::{classical_bernoulli, limit_q_to_1, qbernoulli_double_sum};
use qbernoulli::{qbernoulli, Result};

pub fn run_example() -> Result<()> {
    for n in 0..=6 {
        let b = qbernoulli(n)?;
        let limit = limit_q_to_1(&b.poly)?;
        assert_eq!(limit, classical_bernoulli(n));
        println!("B_{n}(X) = {limit}");
    }

    // An independent expansion through the numbers B_k,q.
    for n in 0..=5 {
        assert_eq!(qbernoulli_double_sum(n), qbernoulli(n)?.poly);
    }
    println!("double-sum expansion agrees for n <= 5");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
