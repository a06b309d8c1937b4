#ifndef TILED_RUNTIME_HPP
#define TILED_RUNTIME_HPP

namespace tiled {

// Upper bound on worker threads used by the internal S_n searches.
// 0 restores the default (hardware concurrency).  Searches give results
// identical to the sequential scan regardless of this setting.
void set_max_threads(unsigned n);
unsigned max_threads();

} // namespace tiled

#endif
