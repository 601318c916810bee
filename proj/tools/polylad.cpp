#include <cstdio>

int main() {
    std::puts("polylad: CLI not wired up yet");
    return 2;
}
