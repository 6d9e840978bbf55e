#include <doctest.h>
#include "refinery/search.hpp"

TEST_CASE("placeholder test_search") { CHECK(true); }
