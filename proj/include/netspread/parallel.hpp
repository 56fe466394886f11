// Copyright 2026 The netspread Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace netspread {

// Worker count: `requested` if nonzero, else NETSPREAD_THREADS if set and
// nonzero, else the hardware concurrency.
size_t ResolveThreads(size_t requested = 0);

// Calls fn(i) for i in [0, count) on up to `threads` workers. Callers write
// results by index, so output does not depend on scheduling. The first
// exception thrown by any call is rethrown after all workers stop.
void ParallelFor(size_t count, size_t threads, const std::function<void(size_t)>& fn);

}  // namespace netspread
