from cotype_bench.cli import main

main(prog_name="cotype-bench")
