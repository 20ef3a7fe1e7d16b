use std::io::Write;

use radialmaps::config::SEED_ENV;

fn main() {
    let seed = std::env::var(SEED_ENV).ok();
    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr().lock();
    let code = radialmaps::run(
        std::env::args_os(),
        seed.as_deref(),
        &mut stdout,
        &mut stderr,
    );
    let _ = stdout.flush();
    std::process::exit(code);
}
