package sm;

public class HolderA {

    int codigo;
    int volume;
    int margem;
    int tipo;
}
