//
// Copyright 2026 The qdpkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#pragma once

#include <cstddef>
#include <functional>

namespace qdpkit {

// Number of worker threads: hardware concurrency capped by the
// QDPKIT_THREADS environment variable (values < 1 mean 1).
std::size_t worker_thread_count();

// Runs fn(i) for i in [0, n). Work is split into contiguous index blocks,
// one per worker; results must be written by index so that output order
// never depends on scheduling. Exceptions from workers are rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace qdpkit
