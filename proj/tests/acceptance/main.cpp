#include <iostream>

#include "criteria.hpp"

int main() { return padicfft::acceptance::run_suite(std::cout); }
