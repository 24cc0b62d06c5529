use std::process::ExitCode;
use std::time::Instant;

use liecot_core::repro;
use liecot_core::Execution;

fn main() -> ExitCode {
    let mut failed = 0;
    for id in 1..=repro::COUNT {
        let start = Instant::now();
        let r = repro::run(id, Execution::default()).expect("id in range");
        println!("{r} [{:.2}s]", start.elapsed().as_secs_f64());
        if !r.pass {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        usize::from(repro::COUNT) - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
