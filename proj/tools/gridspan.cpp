#include <gridspan/numeric.hpp>

#include <cstdio>

int main() {
    std::puts("gridspan: commands not wired up yet");
    return 2;
}
