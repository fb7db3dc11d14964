#![no_main]

use libfuzzer_sys::fuzz_target;
use osp_superdim::partitions::Partition;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(lambda) = s.parse::<Partition>() {
        assert_eq!(lambda.to_string().parse::<Partition>().unwrap(), lambda);
        if lambda.weight() > 10_000 {
            return;
        }
        assert_eq!(lambda.conjugate().conjugate(), lambda);
        assert_eq!(lambda.frobenius().to_partition(), lambda);
    }
});
