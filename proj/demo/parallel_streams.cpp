// Partition one RANMAR sequence into non-overlapping blocks of 2^40
// outputs -- one stream per worker, disjoint by construction, no
// stepping involved.
#include <cstdio>

#include "ranmar/ranmar.hpp"

int main() {
    const ranmar::JumpCount block = ranmar::JumpCount(1) << 40;
    auto streams = ranmar::make_streams(/*seed=*/2024, block, /*n_streams=*/4);

    for (std::size_t k = 0; k < streams.size(); ++k) {
        std::printf("stream %zu (starts at output %zu * 2^40): ", k, k);
        for (int n = 0; n < 4; ++n) std::printf("%.6f ", ranmar::next_f64(streams[k]));
        std::printf("\n");
    }
    return 0;
}
