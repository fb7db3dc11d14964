#![no_main]

use libfuzzer_sys::fuzz_target;
use osp_superdim::cli::parse;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let argv = std::iter::once("osp-superdim").chain(s.split('\0'));
    let _ = parse(argv);
});
