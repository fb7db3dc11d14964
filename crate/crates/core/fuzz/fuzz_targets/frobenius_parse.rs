#![no_main]

use libfuzzer_sys::fuzz_target;
use osp_superdim::partitions::FrobeniusForm;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(form) = s.parse::<FrobeniusForm>() {
        assert_eq!(form.to_string().parse::<FrobeniusForm>().unwrap(), form);
        if form.weight() <= 200 {
            assert_eq!(form.to_partition().frobenius(), form);
        }
    }
});
