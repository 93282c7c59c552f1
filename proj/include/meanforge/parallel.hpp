#pragma once

namespace meanforge {

/// Worker count for data-parallel verification: hardware concurrency capped
/// by the MEANFORGE_THREADS environment variable (>= 1).
int worker_count();

}  // namespace meanforge
