from clusterclass.cli import main

main()
