//! Point counts turned into polynomials in `q`, and their specialisations
//! at `q = 1` and `q = ℓ`.

mod interp;
mod json;
mod table;

pub use interp::{interpolate_checked, interpolate_counts, CountPoly};
pub use json::{from_json, from_json_str, to_json, to_json_string};
pub use table::{HallTable, PairInfo, Specialized, TableConfig, Triple, Violation};
