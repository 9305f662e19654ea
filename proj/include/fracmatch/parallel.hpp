#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace fracmatch {

// Splits [0, total) into fixed chunks and runs `work(begin, end)` for each
// chunk on up to `threads` workers. Results come back in chunk order, so a
// left fold over them is independent of the worker count and scheduling.
template < typename Result, typename Work >
std::vector< Result > parallel_chunks( std::uint64_t total, unsigned threads, Work&& work,
                                       std::uint64_t chunk_size = 1u << 12 )
{
    if ( chunk_size == 0 )
        chunk_size = 1;
    std::uint64_t chunks = total == 0 ? 0 : ( total + chunk_size - 1 ) / chunk_size;
    std::vector< Result > results( chunks );
    std::atomic< std::uint64_t > next{ 0 };
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [ & ] {
        try {
            for ( std::uint64_t c = next++; c < chunks; c = next++ ) {
                std::uint64_t begin = c * chunk_size;
                std::uint64_t end = std::min( total, begin + chunk_size );
                results[ c ] = work( begin, end );
            }
        } catch ( ... ) {
            std::lock_guard lock( failure_mutex );
            if ( !failure )
                failure = std::current_exception();
            next = chunks;
        }
    };

    unsigned n = std::max( 1u, threads );
    if ( n == 1 || chunks <= 1 ) {
        worker();
    } else {
        std::vector< std::thread > pool;
        for ( unsigned i = 0; i < std::min< std::uint64_t >( n, chunks ); ++i )
            pool.emplace_back( worker );
        for ( auto& t : pool )
            t.join();
    }
    if ( failure )
        std::rethrow_exception( failure );
    return results;
}

} // namespace fracmatch
