#![no_main]

use libfuzzer_sys::fuzz_target;
use osp_superdim::cli::SeriesDocument;
use osp_superdim::series::TruncatedSeries;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = serde_json::from_slice::<TruncatedSeries>(data) {
        let again: TruncatedSeries = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(again.coeffs(), s.coeffs());
    }
    if let Ok(doc) = serde_json::from_slice::<SeriesDocument>(data) {
        let _ = doc.series();
    }
});
