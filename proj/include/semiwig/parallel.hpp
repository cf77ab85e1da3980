#pragma once

#include <functional>

namespace semiwig {

// 0 means hardware concurrency
void set_thread_count(int k);
int thread_count();

// body(i) for i in [0, n), rows split across threads
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace semiwig
