#pragma once

namespace binfact {

// Every kernel has a serial and an OpenMP path. Both use the same block
// topology for reductions, so results are bitwise identical.
enum class Execution { serial, parallel };

// 0 selects the OpenMP runtime default.
void set_thread_count(int threads);
int thread_count();

// Restores the previous OpenMP thread count on scope exit.
class ThreadScope {
 public:
  explicit ThreadScope(int threads);
  ~ThreadScope();
  ThreadScope(const ThreadScope&) = delete;
  ThreadScope& operator=(const ThreadScope&) = delete;

 private:
  int saved_;
};

}  // namespace binfact
