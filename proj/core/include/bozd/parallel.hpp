#pragma once

#include <functional>

namespace bozd {

// Worker count: BO_WORKERS env var when set, hardware concurrency otherwise.
int worker_count();

// Index-chunked parallel loop; results must be written by index so runs are
// bit-identical for a fixed worker count.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace bozd
