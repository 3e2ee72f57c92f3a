use clap::Parser;

fn main() {
    std::process::exit(ordgroupoid::cli::run(ordgroupoid::cli::Cli::parse()));
}
