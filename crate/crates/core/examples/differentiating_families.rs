//! Bit flips of each reducer on the four worst-case families, with fitted
//! log-log slopes.
//!
//!     cargo run --release --example differentiating_families

use sparse_reduce::error::Result;
use sparse_reduce::generators::Family;
use sparse_reduce::reduce::ReducerId;
use sparse_reduce::verify::{fit_loglog_slope, scaling_series};

const SIZES: [usize; 5] = [16, 32, 64, 128, 256];

fn main() -> Result<()> {
    let reducers = [ReducerId::Twist, ReducerId::Swap, ReducerId::Retrospective];
    for family in [Family::K1, Family::K2, Family::K3, Family::K4] {
        println!("{family}");
        for r in reducers {
            let series = scaling_series(family, r, &SIZES)?;
            let slope = fit_loglog_slope(&series)?;
            let flips: Vec<u64> = series.iter().map(|&(_, b)| b).collect();
            println!("  {:<8} slope {slope:5.2}  {flips:?}", r.to_string());
        }
    }
    Ok(())
}
