fn main() {
    std::process::exit(hyperbolic_kernels::cli::run(std::env::args()));
}
