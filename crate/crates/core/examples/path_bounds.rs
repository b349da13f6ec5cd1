//! Lists the smallest supported path for each cycle length and shows the
//! first failing instance just below it.

use odd_graceful::construct::{min_path_len, ConstructionParams};
use odd_graceful::{closed_form_labeling, verify_odd_graceful};

fn main() {
    for m in (4..=20).step_by(2) {
        let n_min = min_path_len(m);
        let below = n_min - 1;
        let verdict = if below >= 1 {
            let p = ConstructionParams::forced(m, below).expect("m even, >= 4");
            let r = verify_odd_graceful(&p.topology(), &closed_form_labeling(&p)).unwrap();
            match r.violations.first() {
                Some(v) => format!("n = {below} fails: {v}"),
                None => format!("n = {below} happens to pass"),
            }
        } else {
            String::new()
        };
        println!("C{m:<2} k = {:<2} needs n >= {n_min:<2} {verdict}", m / 2);
    }
}
